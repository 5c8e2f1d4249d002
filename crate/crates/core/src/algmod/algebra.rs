use crate::exactla::{Field, Matrix, Quotient, Scalar};

use super::AlgModError;

/// A finite-dimensional associative unital algebra over a field, given by
/// structure constants on a fixed basis `e_0, ..., e_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `left_mul[i]` is the matrix of `x ↦ e_i x`.
    left_mul: Vec<Matrix>,
    /// `right_mul[i]` is the matrix of `x ↦ x e_i`.
    right_mul: Vec<Matrix>,
    unit: Matrix,
}

impl Algebra {
    /// `structure[i][j][k]` is the coefficient of `e_k` in `e_i e_j`.
    pub fn new(field: Field, structure: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self, AlgModError> {
        let dim = structure.len();
        let shape_ok = unit.len() == dim
            && structure.iter().all(|row| row.len() == dim && row.iter().all(|c| c.len() == dim));
        if !shape_ok {
            return Err(AlgModError::Shape(format!("structure constants must be {dim}×{dim}×{dim}")));
        }
        if structure.iter().flatten().flatten().chain(&unit).any(|s| s.field() != field) {
            return Err(AlgModError::Shape("structure constant from another field".into()));
        }
        let left_mul = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| structure[i][j][k].clone()))
            .collect();
        let right_mul = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |k, i| structure[i][j][k].clone()))
            .collect();
        let alg = Algebra { field, dim, left_mul, right_mul, unit: Matrix::column(field, &unit) };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgModError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let lhs = self.mul(&ij, &self.basis_element(k));
                    let rhs = self.mul(&self.basis_element(i), &self.basis_product(j, k));
                    if lhs != rhs {
                        return Err(AlgModError::NotAssociative { i, j, k });
                    }
                }
            }
            let e = self.basis_element(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgModError::UnitLaw(i));
            }
        }
        Ok(())
    }

    /// The ground field `K` itself.
    pub fn ground(field: Field) -> Self {
        Algebra::new(field, vec![vec![vec![field.one()]]], vec![field.one()]).expect("K is an algebra")
    }

    /// Group algebra `K[Z/n]` on the basis `g^0, ..., g^{n-1}`.
    pub fn cyclic_group(field: Field, n: usize) -> Self {
        let structure = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| delta(field, (i + j) % n == k)).collect()).collect())
            .collect();
        let unit = (0..n).map(|k| delta(field, k == 0)).collect();
        Algebra::new(field, structure, unit).expect("group algebra")
    }

    /// Truncated polynomials `K[x]/(x^n)` on the basis `1, x, ..., x^{n-1}`.
    pub fn truncated_polynomial(field: Field, n: usize) -> Self {
        let structure = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| delta(field, i + j == k)).collect()).collect())
            .collect();
        let unit = (0..n).map(|k| delta(field, k == 0)).collect();
        Algebra::new(field, structure, unit).expect("truncated polynomial algebra")
    }

    /// Full matrix algebra `M_n(K)` on the basis `E_{ab}` at index `a * n + b`.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let d = n * n;
        let structure = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let (a, b, c, e) = (i / n, i % n, j / n, j % n);
                        (0..d).map(|k| delta(field, b == c && k == a * n + e)).collect()
                    })
                    .collect()
            })
            .collect();
        let unit = (0..d).map(|k| delta(field, k / n == k % n)).collect();
        Algebra::new(field, structure, unit).expect("matrix algebra")
    }

    /// Upper triangular 2×2 matrices on the basis `E11, E12, E22`.
    pub fn upper_triangular(field: Field) -> Self {
        // (row, col) of each basis element
        let pos = [(0, 0), (0, 1), (1, 1)];
        let structure = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let ((a, b), (c, e)) = (pos[i], pos[j]);
                        (0..3).map(|k| delta(field, b == c && pos[k] == (a, e))).collect()
                    })
                    .collect()
            })
            .collect();
        let unit = vec![field.one(), field.zero(), field.one()];
        Algebra::new(field, structure, unit).expect("upper triangular algebra")
    }

    /// Direct product; the basis is the concatenation of the factors' bases.
    pub fn product(parts: &[Algebra]) -> Result<Self, AlgModError> {
        let field = parts.first().map(|a| a.field).ok_or_else(|| AlgModError::Shape("empty product".into()))?;
        if parts.iter().any(|a| a.field != field) {
            return Err(AlgModError::AlgebraMismatch);
        }
        let offsets: Vec<usize> = parts
            .iter()
            .scan(0, |acc, a| {
                let o = *acc;
                *acc += a.dim;
                Some(o)
            })
            .collect();
        let dim: usize = parts.iter().map(|a| a.dim).sum();
        let mut structure = vec![vec![vec![field.zero(); dim]; dim]; dim];
        let mut unit = vec![field.zero(); dim];
        for (a, &o) in parts.iter().zip(&offsets) {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let p = a.basis_product(i, j);
                    for k in 0..a.dim {
                        structure[o + i][o + j][o + k] = p.get(k, 0);
                    }
                }
                unit[o + i] = a.unit.get(i, 0);
            }
        }
        Algebra::new(field, structure, unit)
    }

    /// Quotient by the two-sided ideal generated by `generators` (columns),
    /// together with the projection matrix `R → R/J`.
    pub fn quotient(&self, generators: &[Matrix]) -> Result<(Algebra, Matrix), AlgModError> {
        let ideal = self.ideal_span(generators);
        let q = Quotient::by_span(self.field, self.dim, &ideal);
        let d = q.dim();
        let mut structure = vec![vec![vec![self.field.zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let p = q.proj.mul(&self.mul(&q.lift.col(i), &q.lift.col(j)));
                for k in 0..d {
                    structure[i][j][k] = p.get(k, 0);
                }
            }
        }
        let unit = q.proj.mul(&self.unit);
        let unit = (0..d).map(|k| unit.get(k, 0)).collect();
        Ok((Algebra::new(self.field, structure, unit)?, q.proj))
    }

    /// Span of the two-sided ideal generated by the given columns, as columns.
    pub fn ideal_span(&self, generators: &[Matrix]) -> Matrix {
        let mut cols = Vec::new();
        for g in generators {
            for a in &self.left_mul {
                for b in &self.right_mul {
                    cols.push(a.mul(&b.mul(g)));
                }
            }
        }
        Matrix::hstack(self.field, self.dim, &cols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_mul(&self) -> &[Matrix] {
        &self.left_mul
    }

    pub fn right_mul(&self) -> &[Matrix] {
        &self.right_mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Matrix {
        Matrix::unit_vector(self.field, self.dim, i)
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Matrix {
        self.left_mul[i].col(j)
    }

    /// Product of two elements given as coordinate columns.
    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.left_multiplication(a).mul(b)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_multiplication(&self, a: &Matrix) -> Matrix {
        combine(self.field, self.dim, a, &self.left_mul)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_multiplication(&self, a: &Matrix) -> Matrix {
        combine(self.field, self.dim, a, &self.right_mul)
    }

    /// Structure constants `[i][j][k]`.
    pub fn structure(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| (0..self.dim).map(|k| self.left_mul[i].get(k, j)).collect()).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}

/// `Σ_k coeffs[k] · mats[k]`.
pub(crate) fn combine(field: Field, dim: usize, coeffs: &Matrix, mats: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(field, dim, dim);
    for (k, m) in mats.iter().enumerate() {
        let c = coeffs.get(k, 0);
        if !c.is_zero() {
            out = out.add(&m.scale(&c));
        }
    }
    out
}

fn delta(field: Field, b: bool) -> Scalar {
    if b {
        field.one()
    } else {
        field.zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_validate() {
        let f = Field::Prime(3);
        assert!(Algebra::cyclic_group(f, 2).is_commutative());
        assert!(Algebra::truncated_polynomial(Field::Prime(2), 2).is_commutative());
        assert!(!Algebra::upper_triangular(f).is_commutative());
        assert!(!Algebra::matrix_algebra(f, 2).is_commutative());
        assert_eq!(Algebra::product(&[Algebra::ground(f), Algebra::ground(f)]).unwrap().dim(), 2);
    }

    #[test]
    fn broken_structure_is_rejected() {
        let f = Field::Rational;
        // e0 e0 = e1, e1 anything = 0, unit claimed to be e0: unit law fails
        let mut s = vec![vec![vec![f.zero(); 2]; 2]; 2];
        s[0][0][1] = f.one();
        assert!(Algebra::new(f, s, vec![f.one(), f.zero()]).is_err());
    }

    #[test]
    fn quotient_of_dual_numbers_is_the_field() {
        let f = Field::Prime(2);
        let r = Algebra::truncated_polynomial(f, 2);
        let (k, proj) = r.quotient(&[r.basis_element(1)]).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(proj.shape(), (1, 2));
    }
}
