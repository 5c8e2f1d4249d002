use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::report::{CoherenceReport, Witness};

use super::{FusionData, FusionError, Object};

/// Image of an object: entry `(j, k)` is the K-dimension of the `(j, k)` block,
/// an `R_j`-`R_k` bimodule. Rows carry `r_j` and columns `r_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockMatrix {
    pub labels: Vec<String>,
    pub row_fields: Vec<u64>,
    pub col_fields: Vec<u64>,
    pub entries: Vec<Vec<u128>>,
}

impl BlockMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, j: usize, k: usize) -> u128 {
        self.entries[j][k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> BlockMatrix {
        let n = self.size();
        BlockMatrix {
            labels: self.labels.clone(),
            row_fields: self.col_fields.clone(),
            col_fields: self.row_fields.clone(),
            entries: (0..n).map(|j| (0..n).map(|k| self.entries[k][j]).collect()).collect(),
        }
    }

    pub fn add(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut out = self.clone();
        for (row, o) in out.entries.iter_mut().zip(&other.entries) {
            for (a, b) in row.iter_mut().zip(o) {
                *a += b;
            }
        }
        out
    }

    /// Number of non-zero blocks in each row and each column.
    pub fn support_sizes(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.size();
        let rows = (0..n).map(|j| (0..n).filter(|&k| self.entries[j][k] != 0).count()).collect();
        let cols = (0..n).map(|k| (0..n).filter(|&j| self.entries[j][k] != 0).count()).collect();
        (rows, cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "labels": self.labels,
            "row_fields": self.row_fields,
            "col_fields": self.col_fields,
            "entries": self.entries,
        })
    }
}

impl fmt::Display for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .labels
            .iter()
            .map(String::len)
            .chain(self.entries.iter().flatten().map(|v| v.to_string().len()))
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$}", "")?;
        for l in &self.labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for (l, row) in self.labels.iter().zip(&self.entries) {
            write!(f, "{l:>width$}")?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One line of a growth-bound table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub n: u32,
    pub end_dim: u128,
    pub bound: u128,
}

impl FusionData {
    fn empty_block(&self) -> BlockMatrix {
        let n = self.rank();
        BlockMatrix {
            labels: self.simples.clone(),
            row_fields: self.endo_dim.clone(),
            col_fields: self.endo_dim.clone(),
            entries: vec![vec![0; n]; n],
        }
    }

    fn check_object(&self, x: &Object) -> Result<(), FusionError> {
        if x.len() != self.rank() {
            return Err(FusionError::Malformed(format!("object has {} multiplicities for {} simples", x.len(), self.rank())));
        }
        Ok(())
    }

    /// Entry `(j, k) = Σ_i m_i c_{ik}^j r_j`.
    pub fn embed_object(&self, x: &Object) -> Result<BlockMatrix, FusionError> {
        self.check_object(x)?;
        let n = self.rank();
        let mut b = self.empty_block();
        for j in 0..n {
            for k in 0..n {
                let mut acc: u128 = 0;
                for (i, &m) in x.iter().enumerate() {
                    let term = m
                        .checked_mul(self.c(i, k, j) as u128 * self.endo_dim[j] as u128)
                        .ok_or(FusionError::Overflow)?;
                    acc = acc.checked_add(term).ok_or(FusionError::Overflow)?;
                }
                b.entries[j][k] = acc;
            }
        }
        Ok(b)
    }

    /// Entry `(j, n) = Σ_k V_{jk} W_{kn} / r_k`.
    pub fn tensor_images(&self, v: &BlockMatrix, w: &BlockMatrix) -> Result<BlockMatrix, FusionError> {
        let n = self.rank();
        if v.size() != n || w.size() != n {
            return Err(FusionError::Malformed("block matrix of the wrong size".into()));
        }
        for j in 0..n {
            for k in 0..n {
                let r = self.endo_dim[k];
                if v.entries[j][k] % r as u128 != 0 {
                    return Err(FusionError::Divisibility {
                        row: self.simples[j].clone(),
                        col: self.simples[k].clone(),
                        value: v.entries[j][k],
                        field: r,
                    });
                }
            }
        }
        let mut out = self.empty_block();
        for j in 0..n {
            for m in 0..n {
                let mut acc: u128 = 0;
                for k in 0..n {
                    let term = (v.entries[j][k] / self.endo_dim[k] as u128)
                        .checked_mul(w.entries[k][m])
                        .ok_or(FusionError::Overflow)?;
                    acc = acc.checked_add(term).ok_or(FusionError::Overflow)?;
                }
                out.entries[j][m] = acc;
            }
        }
        Ok(out)
    }

    pub fn dual_image(&self, v: &BlockMatrix) -> BlockMatrix {
        v.transpose()
    }

    /// `dim_K End(X) = Σ m_i² r_i`, cross-checked against the number of unit
    /// summands in `X ⊙ X*`.
    pub fn end_dimension(&self, x: &Object) -> Result<u128, FusionError> {
        self.check_object(x)?;
        let mut direct: u128 = 0;
        for (i, &m) in x.iter().enumerate() {
            let sq = m.checked_mul(m).and_then(|s| s.checked_mul(self.endo_dim[i] as u128));
            direct = sq.and_then(|s| direct.checked_add(s)).ok_or(FusionError::Overflow)?;
        }
        let via_unit = self.tensor(x, &self.dual_object(x))?[self.unit];
        if direct != via_unit {
            return Err(FusionError::InternalMismatch { direct, via_unit });
        }
        Ok(direct)
    }

    /// Largest row or column sum of the image of `X`.
    pub fn growth_bound(&self, x: &Object) -> Result<u128, FusionError> {
        let v = self.embed_object(x)?;
        if v.is_zero() {
            return Err(FusionError::ZeroObject);
        }
        let n = self.rank();
        let rows = (0..n).map(|j| v.entries[j].iter().sum::<u128>());
        let cols = (0..n).map(|k| (0..n).map(|j| v.entries[j][k]).sum::<u128>());
        Ok(rows.chain(cols).max().unwrap_or(0))
    }

    /// `dim End(X^{⊙n})` for `n = 1..=n_max` against `d^{2n}`, where `d` is the
    /// growth bound, scaled by the square of the largest `r_i` when those vary.
    pub fn check_growth_bound(&self, x: &Object, n_max: u32) -> Result<(CoherenceReport, Vec<GrowthRow>), FusionError> {
        if n_max == 0 {
            return Err(FusionError::Malformed("n_max must be at least 1".into()));
        }
        let d = self.growth_bound(x)?;
        let c = *self.endo_dim.iter().max().expect("non-empty") as u128;
        let base = if self.endo_dim.iter().all(|&r| r == 1) { d } else { d * c * c };
        let v = self.embed_object(x)?;
        let mut report = CoherenceReport::new(format!("growth of End(X^n) for X = {}", self.format_object(x)));
        let mut rows = Vec::new();
        let mut power = x.clone();
        let mut image = v.clone();
        for n in 1..=n_max {
            if n > 1 {
                power = self.tensor(&power, x)?;
                image = self.tensor_images(&image, &v)?;
            }
            let label = format!("n={n}");
            let direct = self.embed_object(&power)?;
            report.record(
                "power_image",
                if direct == image { Ok(()) } else { Err(Witness::new(&[&label], "embed(X^n) differs from the n-th matrix power")) },
            );
            let end_dim = self.end_dimension(&power)?;
            let bound = base.checked_pow(2 * n).ok_or(FusionError::Overflow)?;
            report.record(
                "bound",
                if end_dim <= bound { Ok(()) } else { Err(Witness::new(&[&label], format!("dim End = {end_dim} > {bound}"))) },
            );
            rows.push(GrowthRow { n, end_dim, bound });
        }
        report.set_data("d", json!(d));
        report.set_data("bound_base", json!(base));
        report.set_data("rows", json!(rows));
        report.note("bound column is base^(2n) with base = d, or d·c² when endo dimensions vary (c = max r_i)");
        Ok((report, rows))
    }

    /// Homomorphism, additivity, duality and faithfulness of the embedding on `(X, Y)`.
    pub fn check_embedding_homomorphism(&self, x: &Object, y: &Object) -> Result<CoherenceReport, FusionError> {
        let (vx, vy) = (self.embed_object(x)?, self.embed_object(y)?);
        let (sx, sy) = (self.format_object(x), self.format_object(y));
        let objects = [sx.as_str(), sy.as_str()];
        let mut report = CoherenceReport::new("block-matrix embedding");

        let product = self.embed_object(&self.tensor(x, y)?)?;
        let composed = self.tensor_images(&vx, &vy)?;
        report.record("tensor", same(&product, &composed, &objects, "embed(X⊙Y) ≠ embed(X)·embed(Y)"));

        let sum: Object = x.iter().zip(y).map(|(a, b)| a + b).collect();
        report.record("direct_sum", same(&self.embed_object(&sum)?, &vx.add(&vy), &objects, "embed(X⊕Y) ≠ embed(X)+embed(Y)"));

        for (obj, v, s) in [(x, &vx, &sx), (y, &vy, &sy)] {
            let dual = self.embed_object(&self.dual_object(obj))?;
            report.record("dual", same(&dual, &self.dual_image(v), &[s], "embed(X*) ≠ embed(X)ᵀ"));
            let faithful = v.is_zero() == obj.iter().all(|&m| m == 0);
            report.record(
                "faithful",
                if faithful { Ok(()) } else { Err(Witness::new(&[s], "image vanishes exactly when it should not")) },
            );
        }
        Ok(report)
    }
}

fn same(a: &BlockMatrix, b: &BlockMatrix, objects: &[&str], detail: &str) -> Result<(), Witness> {
    if a == b {
        Ok(())
    } else {
        let mut w = Witness::new(objects, detail);
        w.lhs = Some(json!(a.entries));
        w.rhs = Some(json!(b.entries));
        Err(w)
    }
}
