//! Pass/fail reports shared by every checker.
//!
//! A report is a list of named checks. Each check counts the instances it
//! examined and keeps a few witnesses for the ones that failed. Output is
//! deterministic: checks are sorted by name and witnesses by their objects.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::exactla::Matrix;

/// Witnesses kept per check; further failures are only counted.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A failure makes the whole report fail.
    Required,
    /// Informational: failures are reported but do not fail the report.
    Probe,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub objects: Vec<String>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
}

impl Witness {
    pub fn new(objects: &[&str], detail: impl Into<String>) -> Self {
        Witness {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            detail: detail.into(),
            lhs: None,
            rhs: None,
        }
    }

    /// Attaches the two sides of an equation that failed to hold.
    pub fn with_sides(mut self, lhs: &Matrix, rhs: &Matrix) -> Self {
        self.lhs = Some(lhs.to_json());
        self.rhs = Some(rhs.to_json());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub kind: CheckKind,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, outcome: Result<(), Witness>) {
        self.instances += 1;
        if let Err(w) = outcome {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CoherenceReport {
    pub subject: String,
    pub sample: Vec<String>,
    checks: BTreeMap<String, CheckOutcome>,
    pub notes: Vec<String>,
    pub data: BTreeMap<String, Value>,
}

impl CoherenceReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CoherenceReport { subject: subject.into(), ..Default::default() }
    }

    fn entry(&mut self, name: &str, kind: CheckKind) -> &mut CheckOutcome {
        self.checks.entry(name.to_string()).or_insert_with(|| CheckOutcome {
            name: name.to_string(),
            kind,
            instances: 0,
            failures: 0,
            witnesses: Vec::new(),
        })
    }

    /// Records one instance of a required check.
    pub fn record(&mut self, name: &str, outcome: Result<(), Witness>) {
        self.entry(name, CheckKind::Required).record(outcome);
    }

    /// Records one instance of a probe.
    pub fn probe(&mut self, name: &str, outcome: Result<(), Witness>) {
        self.entry(name, CheckKind::Probe).record(outcome);
    }

    /// Records `lhs == rhs`, keeping both sides as the witness on failure.
    pub fn record_eq(&mut self, name: &str, objects: &[&str], lhs: &Matrix, rhs: &Matrix) {
        let outcome = if lhs == rhs {
            Ok(())
        } else {
            Err(Witness::new(objects, "sides differ").with_sides(lhs, rhs))
        };
        self.record(name, outcome);
    }

    /// Declares a check that may end up with zero instances.
    pub fn declare(&mut self, name: &str, kind: CheckKind) {
        self.entry(name, kind);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn set_data(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.get(name)
    }

    pub fn checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.values()
    }

    /// Total failures of required checks.
    pub fn failures(&self) -> usize {
        self.checks.values().filter(|c| c.kind == CheckKind::Required).map(|c| c.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Absorbs another report's checks, notes and data.
    pub fn merge(&mut self, other: CoherenceReport) {
        for (name, c) in other.checks {
            match self.checks.get_mut(&name) {
                Some(mine) => {
                    mine.instances += c.instances;
                    mine.failures += c.failures;
                    let room = MAX_WITNESSES.saturating_sub(mine.witnesses.len());
                    mine.witnesses.extend(c.witnesses.into_iter().take(room));
                }
                None => {
                    self.checks.insert(name, c);
                }
            }
        }
        for s in other.sample {
            if !self.sample.contains(&s) {
                self.sample.push(s);
            }
        }
        self.notes.extend(other.notes);
        self.data.extend(other.data);
    }

    /// Renames every check and data key to `prefix` + name.
    pub fn with_prefix(mut self, prefix: &str) -> Self {
        self.checks = std::mem::take(&mut self.checks)
            .into_iter()
            .map(|(name, mut c)| {
                c.name = format!("{prefix}{name}");
                (c.name.clone(), c)
            })
            .collect();
        self.data = std::mem::take(&mut self.data).into_iter().map(|(k, v)| (format!("{prefix}{k}"), v)).collect();
        self
    }

    pub fn to_json(&self) -> Value {
        let mut checks: Vec<CheckOutcome> = self.checks.values().cloned().collect();
        for c in &mut checks {
            c.witnesses.sort_by(|a, b| (&a.objects, &a.detail).cmp(&(&b.objects, &b.detail)));
        }
        serde_json::json!({
            "subject": self.subject,
            "passed": self.passed(),
            "failures": self.failures(),
            "sample": self.sample,
            "checks": checks,
            "notes": self.notes,
            "data": self.data,
        })
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{} [{verdict}]", self.subject)?;
        if !self.sample.is_empty() {
            writeln!(out, "  sample: {}", self.sample.join(", "))?;
        }
        for c in self.checks.values() {
            let status = match (c.passed(), c.kind) {
                (true, _) => "ok",
                (false, CheckKind::Required) => "FAIL",
                (false, CheckKind::Probe) => "probe-fail",
            };
            writeln!(out, "  {:<32} {:>10} {:>6}/{}", c.name, status, c.instances - c.failures, c.instances)?;
            for w in &c.witnesses {
                writeln!(out, "      at ({}): {}", w.objects.join(", "), w.detail)?;
                if let (Some(l), Some(r)) = (&w.lhs, &w.rhs) {
                    writeln!(out, "        lhs = {l}")?;
                    writeln!(out, "        rhs = {r}")?;
                }
            }
        }
        for (k, v) in &self.data {
            writeln!(out, "  {k}: {v}")?;
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}")?;
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    #[test]
    fn probes_do_not_fail_the_report() {
        let mut r = CoherenceReport::new("demo");
        r.probe("flat", Err(Witness::new(&["X"], "not injective")));
        assert!(r.passed());
        r.record("pentagon", Err(Witness::new(&["A", "B", "C", "D"], "differs")));
        assert!(!r.passed());
        assert_eq!(r.failures(), 1);
    }

    #[test]
    fn witnesses_are_capped_and_json_is_stable() {
        let f = Field::Prime(3);
        let mut r = CoherenceReport::new("demo");
        for i in 0..8 {
            let name = format!("X{i}");
            r.record_eq("eq", &[&name], &Matrix::identity(f, 1), &Matrix::zeros(f, 1, 1));
        }
        let c = r.check("eq").unwrap();
        assert_eq!((c.instances, c.failures, c.witnesses.len()), (8, 8, MAX_WITNESSES));
        assert_eq!(r.to_json().to_string(), r.clone().to_json().to_string());
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn merge_accumulates() {
        let mut a = CoherenceReport::new("a");
        a.record("x", Ok(()));
        let mut b = CoherenceReport::new("b");
        b.record("x", Ok(()));
        b.record("y", Ok(()));
        a.merge(b);
        assert_eq!(a.check("x").unwrap().instances, 2);
        assert!(a.check("y").is_some());
    }
}
