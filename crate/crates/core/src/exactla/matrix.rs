use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::field::{mod_inv, Field, Scalar};
use super::LinAlgError;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Data,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Data {
    Mod(Vec<u32>),
    Rat(Vec<BigRational>),
}

trait Arith {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// Dot product of `a[i]` with `b[i]`.
    fn dot<'a>(&self, pairs: impl Iterator<Item = (&'a Self::E, &'a Self::E)>) -> Self::E
    where
        Self::E: 'a,
    {
        pairs.fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }
}

struct ModP(u32);
struct Rat;

impl Arith for ModP {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        a * b % self.0
    }
    fn inv(&self, a: &u32) -> u32 {
        mod_inv(*a, self.0)
    }
    fn dot<'a>(&self, pairs: impl Iterator<Item = (&'a u32, &'a u32)>) -> u32 {
        // p <= 97 keeps every product below 2^14; reduce lazily
        let mut acc = 0u64;
        for (x, y) in pairs {
            acc += (*x as u64) * (*y as u64);
        }
        (acc % self.0 as u64) as u32
    }
}

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

fn mul_kernel<A: Arith>(ar: &A, a: &[A::E], b: &[A::E], n: usize, k: usize, m: usize) -> Vec<A::E> {
    let mut out = Vec::with_capacity(n * m);
    // transpose b once so both operands stream row-wise
    let mut bt = Vec::with_capacity(k * m);
    for j in 0..m {
        for l in 0..k {
            bt.push(b[l * m + j].clone());
        }
    }
    for i in 0..n {
        let row = &a[i * k..(i + 1) * k];
        for j in 0..m {
            let col = &bt[j * k..(j + 1) * k];
            out.push(ar.dot(row.iter().zip(col.iter())));
        }
    }
    out
}

/// In-place reduced row echelon form; returns pivot columns.
fn rref_kernel<A: Arith>(ar: &A, d: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ar.is_zero(&d[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                d.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&d[r * cols + c]);
        for j in c..cols {
            d[r * cols + j] = ar.mul(&d[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || ar.is_zero(&d[i * cols + c]) {
                continue;
            }
            let factor = d[i * cols + c].clone();
            for j in c..cols {
                let v = ar.mul(&factor, &d[r * cols + j]);
                d[i * cols + j] = ar.sub(&d[i * cols + j], &v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let data = match field {
            Field::Prime(_) => Data::Mod(vec![0; rows * cols]),
            Field::Rational => Data::Rat(vec![BigRational::zero(); rows * cols]),
        };
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, &field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, &f(i, j));
            }
        }
        m
    }

    /// Integer rows, reduced into the field. Rows must have equal length.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn column(field: Field, entries: &[Scalar]) -> Self {
        Matrix::from_fn(field, entries.len(), 1, |i, _| entries[i].clone())
    }

    /// Standard basis vector `e_i` of length `n`, as a column.
    pub fn unit_vector(field: Field, n: usize, i: usize) -> Self {
        let mut m = Matrix::zeros(field, n, 1);
        m.set(i, 0, &field.one());
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn modulus(&self) -> u32 {
        match self.field {
            Field::Prime(p) => p,
            Field::Rational => 0,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let k = i * self.cols + j;
        match &self.data {
            Data::Mod(v) => Scalar::Mod { value: v[k], modulus: self.modulus() },
            Data::Rat(v) => Scalar::Rational(v[k].clone()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: &Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert_eq!(value.field(), self.field, "scalar from a different field");
        let k = i * self.cols + j;
        match (&mut self.data, value) {
            (Data::Mod(v), Scalar::Mod { value, .. }) => v[k] = *value,
            (Data::Rat(v), Scalar::Rational(q)) => v[k] = q.clone(),
            _ => unreachable!(),
        }
    }

    pub fn entries(&self) -> Vec<Scalar> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    fn same_field(&self, other: &Matrix) {
        assert_eq!(self.field, other.field, "matrices over different fields");
    }

    /// Matrix product. Panics on a shape mismatch; see [`Matrix::checked_mul`].
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.checked_mul(other)
            .unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch(self.field, other.field));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let data = match (&self.data, &other.data) {
            (Data::Mod(a), Data::Mod(b)) => Data::Mod(mul_kernel(&ModP(self.modulus()), a, b, n, k, m)),
            (Data::Rat(a), Data::Rat(b)) => Data::Rat(mul_kernel(&Rat, a, b, n, k, m)),
            _ => unreachable!(),
        };
        Ok(Matrix { field: self.field, rows: n, cols: m, data })
    }

    fn zip_with(&self, other: &Matrix, sub: bool) -> Matrix {
        self.same_field(other);
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        let data = match (&self.data, &other.data) {
            (Data::Mod(a), Data::Mod(b)) => {
                let ar = ModP(self.modulus());
                Data::Mod(a.iter().zip(b).map(|(x, y)| if sub { ar.sub(x, y) } else { ar.add(x, y) }).collect())
            }
            (Data::Rat(a), Data::Rat(b)) => {
                Data::Rat(a.iter().zip(b).map(|(x, y)| if sub { x - y } else { x + y }).collect())
            }
            _ => unreachable!(),
        };
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, false)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, true)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field);
        let data = match (&self.data, s) {
            (Data::Mod(a), Scalar::Mod { value, .. }) => {
                let ar = ModP(self.modulus());
                Data::Mod(a.iter().map(|x| ar.mul(x, value)).collect())
            }
            (Data::Rat(a), Scalar::Rational(q)) => Data::Rat(a.iter().map(|x| x * q).collect()),
            _ => unreachable!(),
        };
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.one().neg())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Kronecker product; basis index of `(i, j)` is `i * other_dim + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        match (&self.data, &other.data) {
            (Data::Mod(a), Data::Mod(b)) => {
                let ar = ModP(self.modulus());
                let mut out = vec![0u32; r * c];
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let x = a[i * self.cols + j];
                        if x == 0 {
                            continue;
                        }
                        for k in 0..other.rows {
                            for l in 0..other.cols {
                                out[(i * other.rows + k) * c + j * other.cols + l] =
                                    ar.mul(&x, &b[k * other.cols + l]);
                            }
                        }
                    }
                }
                Matrix { field: self.field, rows: r, cols: c, data: Data::Mod(out) }
            }
            _ => Matrix::from_fn(self.field, r, c, |i, j| {
                let (i1, i2) = (i / other.rows, i % other.rows);
                let (j1, j2) = (j / other.cols, j % other.cols);
                self.get(i1, j1).mul(&other.get(i2, j2)).expect("same field")
            }),
        }
    }

    /// Horizontal concatenation. Every block needs the same row count.
    pub fn hstack(field: Field, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, offset + j, &b.get(i, j));
                }
            }
            offset += b.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let t: Vec<Matrix> = blocks.iter().map(Matrix::transpose).collect();
        Matrix::hstack(field, cols, &t).transpose()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn col(&self, j: usize) -> Matrix {
        self.select_cols(&[j])
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Mod(v) => v.iter().all(|x| *x == 0),
            Data::Rat(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = match &mut out.data {
            Data::Mod(v) => rref_kernel(&ModP(self.modulus()), v, self.rows, self.cols),
            Data::Rat(v) => rref_kernel(&Rat, v, self.rows, self.cols),
        };
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as the columns of a `cols × nullity` matrix.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.field, self.cols, free.len());
        for (b, &f) in free.iter().enumerate() {
            basis.set(f, b, &self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(p, b, &r.get(row, f).neg());
            }
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::hstack(self.field, n, &[self.clone(), Matrix::identity(self.field, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Some `X` with `self · X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let aug = Matrix::hstack(self.field, self.rows, &[self.clone(), rhs.clone()]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, &r.get(row, n + j));
            }
        }
        Some(x)
    }

    /// Flattens row-major into a single column.
    pub fn vectorize(&self) -> Matrix {
        let mut out = self.clone();
        out.rows = self.rows * self.cols;
        out.cols = 1;
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array((0..self.cols).map(|j| self.get(i, j).to_json()).collect()))
                .collect(),
        )
    }

    /// Parses nested arrays; `shape` is required when there are no rows.
    pub fn from_json(field: Field, value: &serde_json::Value, shape: Option<(usize, usize)>) -> Result<Matrix, LinAlgError> {
        let bad = || LinAlgError::Parse(value.to_string());
        let rows = value.as_array().ok_or_else(bad)?;
        let parsed: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|v| Scalar::from_json(field, v))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        let (nr, nc) = match shape {
            Some(s) => s,
            None => (parsed.len(), parsed.first().map_or(0, Vec::len)),
        };
        if parsed.len() != nr || parsed.iter().any(|r| r.len() != nc) {
            return Err(LinAlgError::DimensionMismatch { expected: nr * nc, found: parsed.iter().map(Vec::len).sum() });
        }
        Ok(Matrix::from_fn(field, nr, nc, |i, j| parsed[i][j].clone()))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} {}", self.field, self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod3_product_by_hand() {
        let f = Field::Prime(3);
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_rows(f, &[vec![1, 0], vec![1, 1]]);
        // [[1+2, 2], [1, 1]] reduced mod 3
        assert_eq!(a.mul(&b), Matrix::from_rows(f, &[vec![0, 2], vec![1, 1]]));
    }

    #[test]
    fn kernel_of_rank_one_rational() {
        let q = Field::Rational;
        let a = Matrix::from_rows(q, &[vec![1, 2], vec![2, 4]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert_eq!(k, Matrix::from_rows(q, &[vec![-2], vec![1]]));
    }

    #[test]
    fn rational_inverse() {
        let q = Field::Rational;
        let a = Matrix::from_rows(q, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(Matrix::from_rows(q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_finds_preimage() {
        let f = Field::Prime(5);
        let a = Matrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Matrix::from_rows(f, &[vec![3], vec![4]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = Matrix::from_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert!(singular.solve(&Matrix::from_rows(f, &[vec![0], vec![1]])).is_none());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let q = Field::Rational;
        let m = Matrix::from_fn(q, 2, 2, |i, j| q.ratio(i as i64 - 3, j as i64 + 2).unwrap());
        let json = m.to_json();
        assert_eq!(Matrix::from_json(q, &json, None).unwrap(), m);
        assert_eq!(json.to_string(), r#"[["-3/2",-1],[-1,"-2/3"]]"#);
    }
}
