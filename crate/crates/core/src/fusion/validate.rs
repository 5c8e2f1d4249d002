use crate::report::{CoherenceReport, Witness};

use super::FusionData;

impl FusionData {
    /// Checks every fusion-ring axiom exhaustively over the index set.
    pub fn validate(&self) -> CoherenceReport {
        let n = self.rank();
        let e = self.unit;
        let name = |i: usize| self.simples[i].as_str();
        let mut report = CoherenceReport::new("fusion data");
        report.sample = self.simples.clone();

        for k in 0..n {
            for j in 0..n {
                let want = u64::from(j == k);
                let left = self.c(e, k, j);
                report.record(
                    "unit_left",
                    check(left == want, &[name(k), name(j)], || format!("c(e,{},{}) = {left}, expected {want}", name(k), name(j))),
                );
                let right = self.c(k, e, j);
                report.record(
                    "unit_right",
                    check(right == want, &[name(k), name(j)], || format!("c({},e,{}) = {right}, expected {want}", name(k), name(j))),
                );
            }
        }

        for i in 0..n {
            for k in 0..n {
                for m in 0..n {
                    for j in 0..n {
                        let lhs: u128 = (0..n).map(|p| self.c(i, k, p) as u128 * self.c(p, m, j) as u128).sum();
                        let rhs: u128 = (0..n).map(|p| self.c(k, m, p) as u128 * self.c(i, p, j) as u128).sum();
                        report.record(
                            "associativity",
                            check(lhs == rhs, &[name(i), name(k), name(m), name(j)], || {
                                format!("((X_i X_k) X_m) has {lhs} copies of X_j but (X_i (X_k X_m)) has {rhs}")
                            }),
                        );
                    }
                }
            }
        }

        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let lhs = self.c(i, k, j) as u128 * self.endo_dim[j] as u128;
                    let rhs = self.c(self.dual[i], j, k) as u128 * self.endo_dim[k] as u128;
                    report.record(
                        "reciprocity",
                        check(lhs == rhs, &[name(i), name(k), name(j)], || {
                            format!("c(i,k,j)·r_j = {lhs} but c(i*,j,k)·r_k = {rhs}")
                        }),
                    );
                }
            }
        }

        for i in 0..n {
            let dd = self.dual[self.dual[i]];
            report.record(
                "dual_involution",
                check(dd == i, &[name(i)], || format!("double dual is {}", name(dd))),
            );
        }
        report.record(
            "dual_involution",
            check(self.dual[e] == e, &[name(e)], || "unit is not self-dual".to_string()),
        );
        report.record(
            "unit_simple",
            check(self.endo_dim[e] == 1, &[name(e)], || format!("r_e = {}", self.endo_dim[e])),
        );

        // a finite index set makes every row and column finite; the check
        // still records the support sizes so the data model is explicit
        let mut widest = 0;
        for i in 0..n {
            for j in 0..n {
                let support = (0..n).filter(|&k| self.c(i, k, j) != 0 || self.c(k, i, j) != 0).count();
                widest = widest.max(support);
                report.record("finiteness", Ok(()));
            }
        }
        report.set_data("max_support", serde_json::json!(widest));
        report
    }
}

fn check(ok: bool, objects: &[&str], detail: impl FnOnce() -> String) -> Result<(), Witness> {
    if ok {
        Ok(())
    } else {
        Err(Witness::new(objects, detail()))
    }
}
