//! Fusion data of a semisimple rigid monoidal category and its image in
//! block matrices: tensor product becomes matrix multiplication and duals
//! become transposes.

mod bundled;
mod embed;
mod validate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bundled::{bundled, bundled_names};
pub use embed::{BlockMatrix, GrowthRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("unknown simple object `{0}`")]
    UnknownSimple(String),
    #[error("malformed fusion data: {0}")]
    Malformed(String),
    #[error("block ({row}, {col}) of dimension {value} is not divisible by r = {field}")]
    Divisibility { row: String, col: String, value: u128, field: u64 },
    #[error("zero object has no growth bound")]
    ZeroObject,
    #[error("End dimension {direct} disagrees with unit multiplicity {via_unit} in X⊙X*")]
    InternalMismatch { direct: u128, via_unit: u128 },
    #[error("integer overflow while expanding tensor powers")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Multiplicities `m_i` of `X = ⊕ m_i X_i`, indexed like the simples.
pub type Object = Vec<u128>;

/// Fusion multiplicities `c_{ik}^j = dim Hom(X_j, X_i ⊙ X_k)` over the
/// endomorphism skew-fields, with duals and endo-dimensions `r_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionData {
    simples: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    endo_dim: Vec<u64>,
    /// `c[(i * n + k) * n + j]`
    mult: Vec<u64>,
}

/// Wire form: `{"simples", "unit", "dual", "endo_dim", "fusion": [[i, k, j, c], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionSpec {
    pub simples: Vec<String>,
    pub unit: String,
    #[serde(default)]
    pub dual: BTreeMap<String, String>,
    #[serde(default)]
    pub endo_dim: BTreeMap<String, u64>,
    pub fusion: Vec<(String, String, String, u64)>,
}

impl FusionData {
    /// Assembles fusion data without checking any of the ring axioms; see [`FusionData::validate`].
    pub fn from_parts(
        simples: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        endo_dim: Vec<u64>,
        mult: Vec<u64>,
    ) -> Result<Self, FusionError> {
        let n = simples.len();
        let malformed = |m: &str| Err(FusionError::Malformed(m.to_string()));
        if n == 0 {
            return malformed("no simple objects");
        }
        if unit >= n {
            return malformed("unit index out of range");
        }
        if dual.len() != n || dual.iter().any(|&d| d >= n) {
            return malformed("dual must map simples to simples");
        }
        if endo_dim.len() != n || endo_dim.contains(&0) {
            return malformed("endo dimensions must be positive integers");
        }
        if mult.len() != n * n * n {
            return malformed("multiplicity table has the wrong size");
        }
        let mut seen = simples.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != n {
            return malformed("duplicate simple labels");
        }
        Ok(FusionData { simples, unit, dual, endo_dim, mult })
    }

    pub fn from_spec(spec: &FusionSpec) -> Result<Self, FusionError> {
        let n = spec.simples.len();
        let index: BTreeMap<&str, usize> = spec.simples.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let find = |s: &str| index.get(s).copied().ok_or_else(|| FusionError::UnknownSimple(s.to_string()));
        let unit = find(&spec.unit)?;
        let mut dual: Vec<usize> = (0..n).collect();
        for (a, b) in &spec.dual {
            dual[find(a)?] = find(b)?;
        }
        let mut endo_dim = vec![1; n];
        for (a, r) in &spec.endo_dim {
            endo_dim[find(a)?] = *r;
        }
        let mut mult = vec![0; n * n * n];
        let mut seen = vec![false; n * n * n];
        for (i, k, j, c) in &spec.fusion {
            let idx = (find(i)? * n + find(k)?) * n + find(j)?;
            if seen[idx] {
                return Err(FusionError::Malformed(format!("triple ({i}, {k}, {j}) listed twice")));
            }
            seen[idx] = true;
            mult[idx] = *c;
        }
        FusionData::from_parts(spec.simples.clone(), unit, dual, endo_dim, mult)
    }

    pub fn from_json(text: &str) -> Result<Self, FusionError> {
        let spec: FusionSpec = serde_json::from_str(text).map_err(|e| FusionError::Parse(e.to_string()))?;
        FusionData::from_spec(&spec)
    }

    pub fn to_spec(&self) -> FusionSpec {
        let n = self.rank();
        let name = |i: usize| self.simples[i].clone();
        let mut fusion = Vec::new();
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let c = self.c(i, k, j);
                    if c != 0 {
                        fusion.push((name(i), name(k), name(j), c));
                    }
                }
            }
        }
        FusionSpec {
            simples: self.simples.clone(),
            unit: name(self.unit),
            dual: (0..n).map(|i| (name(i), name(self.dual[i]))).collect(),
            endo_dim: (0..n).map(|i| (name(i), self.endo_dim[i])).collect(),
            fusion,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("plain data serialises")
    }

    /// Number of simple objects.
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn simples(&self) -> &[String] {
        &self.simples
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn endo_dim(&self, i: usize) -> u64 {
        self.endo_dim[i]
    }

    pub fn endo_dims(&self) -> &[u64] {
        &self.endo_dim
    }

    /// `c_{ik}^j`.
    pub fn c(&self, i: usize, k: usize, j: usize) -> u64 {
        let n = self.rank();
        self.mult[(i * n + k) * n + j]
    }

    pub fn set_c(&mut self, i: usize, k: usize, j: usize, value: u64) {
        let n = self.rank();
        self.mult[(i * n + k) * n + j] = value;
    }

    pub fn set_dual(&mut self, i: usize, d: usize) {
        self.dual[i] = d;
    }

    pub fn set_endo_dim(&mut self, i: usize, r: u64) {
        self.endo_dim[i] = r;
    }

    pub fn set_unit(&mut self, e: usize) {
        self.unit = e;
    }

    pub fn index_of(&self, label: &str) -> Result<usize, FusionError> {
        self.simples
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| FusionError::UnknownSimple(label.to_string()))
    }

    pub fn zero_object(&self) -> Object {
        vec![0; self.rank()]
    }

    pub fn simple(&self, i: usize) -> Object {
        let mut x = self.zero_object();
        x[i] = 1;
        x
    }

    pub fn unit_object(&self) -> Object {
        self.simple(self.unit)
    }

    /// Expands `X ⊙ Y` through the fusion coefficients.
    pub fn tensor(&self, x: &Object, y: &Object) -> Result<Object, FusionError> {
        let n = self.rank();
        let mut out = self.zero_object();
        for i in (0..n).filter(|&i| x[i] != 0) {
            for k in (0..n).filter(|&k| y[k] != 0) {
                let xy = x[i].checked_mul(y[k]).ok_or(FusionError::Overflow)?;
                for (j, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, k, j) as u128;
                    if c != 0 {
                        *o = xy.checked_mul(c).and_then(|v| o.checked_add(v)).ok_or(FusionError::Overflow)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `X^{⊙n}`, left-nested; `X^0` is the unit.
    pub fn power(&self, x: &Object, n: u32) -> Result<Object, FusionError> {
        let mut acc = self.unit_object();
        for _ in 0..n {
            acc = self.tensor(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn dual_object(&self, x: &Object) -> Object {
        let mut out = self.zero_object();
        for (i, m) in x.iter().enumerate() {
            out[self.dual[i]] += m;
        }
        out
    }

    /// Human-readable form like `1 + 2tau`.
    pub fn format_object(&self, x: &Object) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(i, &m)| {
                let s = &self.simples[i];
                match m {
                    1 => s.clone(),
                    // `21` would read as a label; `2(1)` does not
                    _ if s.starts_with(|c: char| c.is_ascii_digit()) => format!("{m}({s})"),
                    _ => format!("{m}{s}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "zero".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for name in bundled_names() {
            let fd = bundled(name).unwrap();
            let text = fd.to_json();
            let back = FusionData::from_json(&text).unwrap();
            assert_eq!(back, fd);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn unknown_labels_and_duplicates_are_rejected() {
        let bad = r#"{"simples":["1"],"unit":"x","fusion":[]}"#;
        assert!(matches!(FusionData::from_json(bad), Err(FusionError::UnknownSimple(_))));
        let dup = r#"{"simples":["1"],"unit":"1","fusion":[["1","1","1",1],["1","1","1",1]]}"#;
        assert!(matches!(FusionData::from_json(dup), Err(FusionError::Malformed(_))));
        assert!(matches!(FusionData::from_json("{"), Err(FusionError::Parse(_))));
    }

    #[test]
    fn fibonacci_powers() {
        let fd = bundled("fibonacci").unwrap();
        let tau = fd.simple(fd.index_of("tau").unwrap());
        assert_eq!(fd.power(&tau, 3).unwrap(), vec![1, 2]);
        assert_eq!(fd.format_object(&fd.power(&tau, 3).unwrap()), "1 + 2tau");
    }
}
