//! JSON wire forms of algebras and modules.
//!
//! Scalars are integers or `"n/d"` strings; matrices are lists of rows.
//! Serialising a parsed value and parsing it again reproduces the same bytes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactla::{Field, Matrix, RawScalar, Scalar};

use super::{AlgModError, Algebra, Bimodule, Module, Side};

pub type RawMatrix = Vec<Vec<RawScalar>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    /// 0 for the rationals, otherwise a prime.
    pub characteristic: u32,
    pub dim: usize,
    /// `structure[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    pub structure: Vec<Vec<Vec<RawScalar>>>,
    pub unit: Vec<RawScalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub side: SideSpec,
    pub dim: usize,
    pub action: Vec<RawMatrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub dim: usize,
    pub left: Vec<RawMatrix>,
    pub right: Vec<RawMatrix>,
}

fn resolve_all(field: Field, raw: &[RawScalar]) -> Result<Vec<Scalar>, AlgModError> {
    raw.iter().map(|s| s.resolve(field).map_err(AlgModError::from)).collect()
}

pub fn matrix_from_raw(field: Field, raw: &RawMatrix, rows: usize, cols: usize) -> Result<Matrix, AlgModError> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(AlgModError::Shape(format!("expected a {rows}×{cols} matrix")));
    }
    let mut m = Matrix::zeros(field, rows, cols);
    for (i, row) in raw.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, &s.resolve(field)?);
        }
    }
    Ok(m)
}

pub fn matrix_to_raw(m: &Matrix) -> RawMatrix {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| RawScalar::from(&m.get(i, j))).collect()).collect()
}

fn actions_from_raw(field: Field, raw: &[RawMatrix], dim: usize) -> Result<Vec<Matrix>, AlgModError> {
    raw.iter().map(|m| matrix_from_raw(field, m, dim, dim)).collect()
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<Algebra, AlgModError> {
        let field = Field::from_characteristic(self.characteristic)?;
        let d = self.dim;
        if self.structure.len() != d || self.structure.iter().any(|r| r.len() != d || r.iter().any(|c| c.len() != d)) {
            return Err(AlgModError::Shape(format!("structure constants must be {d}×{d}×{d}")));
        }
        let structure = self
            .structure
            .iter()
            .map(|row| row.iter().map(|c| resolve_all(field, c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Algebra::new(field, structure, resolve_all(field, &self.unit)?)
    }
}

impl From<&Algebra> for AlgebraSpec {
    fn from(a: &Algebra) -> Self {
        let raw = |s: &Scalar| RawScalar::from(s);
        AlgebraSpec {
            characteristic: a.field().characteristic(),
            dim: a.dim(),
            structure: a
                .structure()
                .iter()
                .map(|row| row.iter().map(|c| c.iter().map(raw).collect()).collect())
                .collect(),
            unit: a.unit().entries().iter().map(raw).collect(),
        }
    }
}

impl ModuleSpec {
    pub fn build(&self, algebra: &Arc<Algebra>) -> Result<Module, AlgModError> {
        let side = match self.side {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        };
        let action = actions_from_raw(algebra.field(), &self.action, self.dim)?;
        Module::new(algebra.clone(), side, self.dim, action)
    }
}

impl From<&Module> for ModuleSpec {
    fn from(m: &Module) -> Self {
        ModuleSpec {
            side: match m.side() {
                Side::Left => SideSpec::Left,
                Side::Right => SideSpec::Right,
            },
            dim: m.dim(),
            action: m.action().iter().map(matrix_to_raw).collect(),
        }
    }
}

impl BimoduleSpec {
    pub fn build(&self, algebra: &Arc<Algebra>) -> Result<Bimodule, AlgModError> {
        let f = algebra.field();
        let left = actions_from_raw(f, &self.left, self.dim)?;
        let right = actions_from_raw(f, &self.right, self.dim)?;
        Bimodule::new(algebra.clone(), self.dim, left, right)
    }
}

impl From<&Bimodule> for BimoduleSpec {
    fn from(b: &Bimodule) -> Self {
        BimoduleSpec {
            dim: b.dim(),
            left: b.left().iter().map(matrix_to_raw).collect(),
            right: b.right().iter().map(matrix_to_raw).collect(),
        }
    }
}

impl Algebra {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&AlgebraSpec::from(self)).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Algebra, AlgModError> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| AlgModError::Parse(e.to_string()))?;
        spec.build()
    }
}

impl Module {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ModuleSpec::from(self)).expect("plain data serialises")
    }

    pub fn from_json(algebra: &Arc<Algebra>, text: &str) -> Result<Module, AlgModError> {
        let spec: ModuleSpec = serde_json::from_str(text).map_err(|e| AlgModError::Parse(e.to_string()))?;
        spec.build(algebra)
    }
}

impl Bimodule {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&BimoduleSpec::from(self)).expect("plain data serialises")
    }

    pub fn from_json(algebra: &Arc<Algebra>, text: &str) -> Result<Bimodule, AlgModError> {
        let spec: BimoduleSpec = serde_json::from_str(text).map_err(|e| AlgModError::Parse(e.to_string()))?;
        spec.build(algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip_is_bit_exact() {
        for alg in [
            Algebra::upper_triangular(Field::Rational),
            Algebra::cyclic_group(Field::Prime(3), 3),
            Algebra::matrix_algebra(Field::Prime(5), 2),
        ] {
            let text = alg.to_json();
            let back = Algebra::from_json(&text).unwrap();
            assert_eq!(back, alg);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn rational_entries_survive() {
        let f = Field::Rational;
        let alg = Arc::new(Algebra::ground(f));
        let half = f.ratio(1, 2).unwrap();
        let m = Bimodule::regular(&alg);
        let text = m.to_json();
        assert_eq!(Bimodule::from_json(&alg, &text).unwrap(), m);
        let spec = ModuleSpec { side: SideSpec::Right, dim: 1, action: vec![vec![vec![RawScalar::from(&half)]]] };
        // 1/2 acting as the unit violates the unit law
        assert!(spec.build(&alg).is_err());
        assert_eq!(serde_json::to_string(&spec.action).unwrap(), r#"[[["1/2"]]]"#);
    }

    #[test]
    fn module_round_trip() {
        let alg = Arc::new(Algebra::truncated_polynomial(Field::Prime(2), 3));
        let m = Module::regular_right(&alg);
        let text = m.to_json();
        let back = Module::from_json(&alg, &text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn malformed_input_is_reported() {
        assert!(matches!(Algebra::from_json("{"), Err(AlgModError::Parse(_))));
        let bad = r#"{"characteristic":4,"dim":1,"structure":[[[1]]],"unit":[1]}"#;
        assert!(Algebra::from_json(bad).is_err());
    }
}
