use super::{Field, Matrix};

/// A quotient `K^n / W` with a canonical basis.
///
/// The basis of the quotient is the set of non-pivot coordinates of the
/// reduced echelon form of `W`, so `proj · lift = id` and `lift` picks the
/// representative supported on those coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `dim × n`: reduce modulo `W`, then read the free coordinates.
    pub proj: Matrix,
    /// `n × dim`: the free coordinate vectors.
    pub lift: Matrix,
    pub free: Vec<usize>,
}

impl Quotient {
    /// Quotient of `K^n` by the column span of `spanning` (`n × m`).
    pub fn by_span(field: Field, n: usize, spanning: &Matrix) -> Quotient {
        assert_eq!(spanning.rows(), n, "spanning set lives in the wrong space");
        let (basis, pivots) = spanning.transpose().rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // reduce(v) = v - sum_i v[p_i] b_i
        let mut reduce = Matrix::identity(field, n);
        for (row, &p) in pivots.iter().enumerate() {
            for k in 0..n {
                let b = basis.get(row, k);
                if !b.is_zero() {
                    let cur = reduce.get(k, p);
                    reduce.set(k, p, &cur.sub(&b).expect("same field"));
                }
            }
        }
        // reduce(e_p) for a pivot p was built as e_p - b_p; the identity entry cancels
        let proj = reduce.select_rows(&free);
        let lift = Matrix::identity(field, n).select_cols(&free);
        Quotient { proj, lift, free }
    }

    pub fn trivial(field: Field, n: usize) -> Quotient {
        Quotient {
            proj: Matrix::identity(field, n),
            lift: Matrix::identity(field, n),
            free: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.proj.cols()
    }

    /// Matrix on the quotient of an endomorphism `a` of the ambient space that preserves `W`.
    pub fn induce(&self, a: &Matrix) -> Matrix {
        self.proj.mul(a).mul(&self.lift)
    }
}
