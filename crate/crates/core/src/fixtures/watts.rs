//! Module-category fixtures: a commutative base algebra, a graded or strict
//! tensor product, named sample modules, sequences and duality data.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algmod::{matrix_from_raw, AlgebraSpec, RawMatrix};
use crate::algmod::{Module, ModuleMap, Side};
use crate::exactla::{Matrix, RawScalar};
use crate::report::{CoherenceReport, Witness};
use crate::watts::{
    check_monoidal_axioms, check_rigidity, check_t_coherence, roundtrip_on, verify_embedding, verify_monoidal_functor,
    GradedTensor, MonoidalStructure, NonBifunctorial, RigidityData, Sequence, Watts, WattsError,
};

use super::FixtureError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum TensorSpec {
    Strict,
    Graded {
        /// `"Z/n"`.
        group: String,
        /// `n³` values, `ω(a, b, c)` at index `(a n + b) n + c`.
        cocycle: Vec<RawScalar>,
        /// Generators of `J_g` per degree, each a coordinate list in `S`.
        ideals: Vec<Vec<Vec<RawScalar>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleEntry {
    name: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    /// Action of the basis of `S` on a module concentrated in `degree`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_action: Option<Vec<RawMatrix>>,
    /// Action of the basis of `R`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<Vec<RawMatrix>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceEntry {
    name: String,
    modules: [String; 3],
    f: RawMatrix,
    g: RawMatrix,
    #[serde(default)]
    short_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RigidityEntry {
    object: String,
    dual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ev: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    db: Option<RawMatrix>,
}

/// A deliberate defect applied on load, for tests that a checker notices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Mutation {
    /// Negates one cocycle value `ω(a, b, c)`.
    CocycleFlip { entry: [usize; 3] },
    /// Makes `id ⊙ g` disagree with `g ⊙ id` composites.
    NonBifunctorial,
    /// Negates `ξ` on one named pair.
    NegateXi { pair: [String; 2] },
    /// Negates the coevaluation of one duality.
    NegateDb { object: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    schema: u32,
    name: String,
    #[serde(default)]
    description: String,
    algebra: AlgebraSpec,
    tensor: TensorSpec,
    #[serde(default)]
    modules: Vec<ModuleEntry>,
    #[serde(default)]
    sequences: Vec<SequenceEntry>,
    #[serde(default)]
    rigidity: Vec<RigidityEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mutation: Option<Mutation>,
}

/// Groups of checks that can be run on a fixture, in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckGroup {
    Axioms,
    T,
    Functor,
    Embedding,
    Rigidity,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 5] = [CheckGroup::Axioms, CheckGroup::T, CheckGroup::Functor, CheckGroup::Embedding, CheckGroup::Rigidity];

    pub fn name(self) -> &'static str {
        match self {
            CheckGroup::Axioms => "axioms",
            CheckGroup::T => "T",
            CheckGroup::Functor => "functor",
            CheckGroup::Embedding => "embedding",
            CheckGroup::Rigidity => "rigidity",
        }
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckGroup {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckGroup::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| FixtureError::Invalid(format!("unknown check group `{s}` (expected all, axioms, T, functor, embedding, rigidity)")))
    }
}

/// A set of check groups, parsed from `all` or a comma-separated list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSet(BTreeSet<CheckGroup>);

impl CheckSet {
    pub fn all() -> Self {
        CheckSet(CheckGroup::ALL.into_iter().collect())
    }

    pub fn only(groups: &[CheckGroup]) -> Self {
        CheckSet(groups.iter().copied().collect())
    }

    pub fn contains(&self, g: CheckGroup) -> bool {
        self.0.contains(&g)
    }

    pub fn groups(&self) -> impl Iterator<Item = CheckGroup> + '_ {
        self.0.iter().copied()
    }
}

impl FromStr for CheckSet {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = BTreeSet::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            if part.trim().eq_ignore_ascii_case("all") {
                return Ok(CheckSet::all());
            }
            set.insert(part.parse()?);
        }
        if set.is_empty() {
            return Err(FixtureError::Invalid("empty check list".into()));
        }
        Ok(CheckSet(set))
    }
}

/// A loaded module-category fixture with any mutation already applied.
pub struct WattsFixture {
    pub name: String,
    pub description: String,
    pub tensor: GradedTensor,
    pub mutation: Option<Mutation>,
    /// `R`, `I`, then the declared modules.
    pub sample: Vec<(String, Module)>,
    pub sequences: Vec<Sequence>,
    pub rigidity: Vec<RigidityData>,
}

fn invalid(msg: impl Into<String>) -> FixtureError {
    FixtureError::Invalid(msg.into())
}

fn parse_group(text: &str) -> Result<usize, FixtureError> {
    text.strip_prefix("Z/")
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| invalid(format!("group must be written Z/n, found `{text}`")))
}

impl WattsFixture {
    pub fn from_json(text: &str) -> Result<Self, FixtureError> {
        let file: FixtureFile = serde_json::from_str(text).map_err(|e| FixtureError::Parse(e.to_string()))?;
        if file.schema != 1 {
            return Err(FixtureError::Parse(format!("unsupported schema {}", file.schema)));
        }
        let base = file.algebra.build().map_err(|e| invalid(e.to_string()))?;
        let field = base.field();
        let s = base.dim();

        let tensor = match &file.tensor {
            TensorSpec::Strict => GradedTensor::strict(base)?,
            TensorSpec::Graded { group, cocycle, ideals } => {
                let n = parse_group(group)?;
                let mut values = cocycle.iter().map(|c| c.resolve(field)).collect::<Result<Vec<_>, _>>().map_err(|e| invalid(e.to_string()))?;
                if let Some(Mutation::CocycleFlip { entry: [a, b, c] }) = &file.mutation {
                    if a.max(b).max(c) >= &n || values.len() != n.pow(3) {
                        return Err(invalid(format!("cocycle entry ({a}, {b}, {c}) is out of range")));
                    }
                    let k = (a * n + b) * n + c;
                    values[k] = values[k].neg();
                }
                let gens = ideals
                    .iter()
                    .map(|gs| gs.iter().map(|g| matrix_from_raw(field, &g.iter().map(|x| vec![x.clone()]).collect(), s, 1)).collect())
                    .collect::<Result<Vec<Vec<Matrix>>, _>>()
                    .map_err(|e| invalid(e.to_string()))?;
                GradedTensor::new(base, n, values, gens)?
            }
        };
        if matches!(file.mutation, Some(Mutation::CocycleFlip { .. })) && matches!(file.tensor, TensorSpec::Strict) {
            return Err(invalid("a cocycle flip needs a graded tensor"));
        }

        let alg = tensor.algebra().clone();
        let mut sample = vec![("R".to_string(), tensor.regular()), ("I".to_string(), tensor.unit())];
        for m in &file.modules {
            if sample.iter().any(|(n, _)| *n == m.name) {
                return Err(invalid(format!("module name `{}` is used twice", m.name)));
            }
            let module = match (&m.action, &m.degree, &m.base_action) {
                (Some(action), None, None) => {
                    let acts = action
                        .iter()
                        .map(|a| matrix_from_raw(field, a, m.dim, m.dim))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| invalid(format!("{}: {e}", m.name)))?;
                    Module::new(alg.clone(), Side::Right, m.dim, acts).map_err(|e| invalid(format!("{}: {e}", m.name)))?
                }
                (None, degree, Some(base_action)) => {
                    let acts = base_action
                        .iter()
                        .map(|a| matrix_from_raw(field, a, m.dim, m.dim))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| invalid(format!("{}: {e}", m.name)))?;
                    tensor.graded_module(degree.unwrap_or(0), m.dim, &acts)?
                }
                _ => return Err(invalid(format!("{}: give either `action` or `base_action` (with an optional `degree`)", m.name))),
            };
            sample.push((m.name.clone(), module));
        }
        let lookup = |name: &str| -> Result<Module, FixtureError> {
            sample.iter().find(|(n, _)| n == name).map(|(_, m)| m.clone()).ok_or_else(|| invalid(format!("unknown module `{name}`")))
        };

        let mut sequences = Vec::new();
        for sq in &file.sequences {
            let [a, b, c] = [lookup(&sq.modules[0])?, lookup(&sq.modules[1])?, lookup(&sq.modules[2])?];
            let f = matrix_from_raw(field, &sq.f, b.dim(), a.dim()).map_err(|e| invalid(format!("{}: f: {e}", sq.name)))?;
            let g = matrix_from_raw(field, &sq.g, c.dim(), b.dim()).map_err(|e| invalid(format!("{}: g: {e}", sq.name)))?;
            let f = ModuleMap::new(a, b.clone(), f).map_err(|e| invalid(format!("{}: f: {e}", sq.name)))?;
            let g = ModuleMap::new(b, c, g).map_err(|e| invalid(format!("{}: g: {e}", sq.name)))?;
            sequences.push(Sequence { name: sq.name.clone(), f, g, short_exact: sq.short_exact });
        }

        let mut rigidity = Vec::new();
        for r in &file.rigidity {
            let (x, dual) = (lookup(&r.object)?, lookup(&r.dual)?);
            let dx = tensor.tensor(&dual, &x)?.dim();
            let xdx = tensor.tensor(&x, &dual)?.dim();
            let one = tensor.unit().dim();
            let (ev, mut db) = match (&r.ev, &r.db) {
                (Some(ev), Some(db)) => (
                    matrix_from_raw(field, ev, one, dx).map_err(|e| invalid(format!("ev for {}: {e}", r.object)))?,
                    matrix_from_raw(field, db, xdx, one).map_err(|e| invalid(format!("db for {}: {e}", r.object)))?,
                ),
                (None, None) if x == tensor.unit() && dual == x => {
                    let lam = tensor.left_unitor(&x)?;
                    let inv = lam.inverse().ok_or_else(|| invalid("λ_I is not invertible"))?;
                    (lam, inv)
                }
                _ => return Err(invalid(format!("{}: ev and db are required unless X = X* = I", r.object))),
            };
            if matches!(&file.mutation, Some(Mutation::NegateDb { object }) if *object == r.object) {
                db = db.neg();
            }
            rigidity.push(RigidityData { object: r.object.clone(), x, dual, ev, db });
        }

        match &file.mutation {
            Some(Mutation::NegateXi { pair }) => {
                for n in pair {
                    lookup(n)?;
                }
            }
            Some(Mutation::NegateDb { object }) if !file.rigidity.iter().any(|r| r.object == *object) => {
                return Err(invalid(format!("no duality data for `{object}`")));
            }
            _ => {}
        }

        Ok(WattsFixture {
            name: file.name,
            description: file.description,
            tensor,
            mutation: file.mutation,
            sample,
            sequences,
            rigidity,
        })
    }

    /// Runs the selected groups and merges them into one report. Check
    /// names carry the group as a prefix; a group that cannot run at all
    /// is recorded as a failed `<group>/ran` check.
    pub fn run(&self, checks: &CheckSet, seed: u64) -> CoherenceReport {
        let wrapped;
        let ct: &dyn MonoidalStructure = match self.mutation {
            Some(Mutation::NonBifunctorial) => {
                wrapped = NonBifunctorial { inner: self.tensor.with_cocycle(self.tensor.cocycle().to_vec()).expect("already validated") };
                &wrapped
            }
            _ => &self.tensor,
        };
        let negate = match &self.mutation {
            Some(Mutation::NegateXi { pair }) => Some((pair[0].as_str(), pair[1].as_str())),
            _ => None,
        };

        let mut rep = CoherenceReport::new(format!("{}: {}", self.name, self.tensor.describe()));
        rep.sample = self.sample.iter().map(|(n, _)| n.clone()).collect();
        rep.set_data("fixture", json!(self.name));
        rep.set_data("seed", json!(seed));
        rep.set_data("checks", json!(checks.groups().map(CheckGroup::name).collect::<Vec<_>>()));
        if let Some(m) = &self.mutation {
            rep.set_data("mutation", serde_json::to_value(m).expect("plain enum"));
        }

        let needs_engine = checks.groups().any(|g| g != CheckGroup::Axioms);
        let engine = if needs_engine { Some(Watts::new(ct)) } else { None };
        for group in checks.groups() {
            let outcome: Result<CoherenceReport, WattsError> = match group {
                CheckGroup::Axioms => check_monoidal_axioms(ct, &self.sample),
                CheckGroup::Rigidity => check_rigidity(ct, engine.as_ref().and_then(|e| e.as_ref().ok()), &self.rigidity),
                _ => match engine.as_ref().expect("engine built") {
                    Err(e) => Err(e.clone()),
                    Ok(w) => match group {
                        CheckGroup::T => check_t_coherence(w, &self.sample),
                        CheckGroup::Functor => verify_monoidal_functor(&w.transported(), &self.sample, negate),
                        _ => self.embedding(w, seed),
                    },
                },
            };
            let prefix = format!("{}/", group.name());
            match outcome {
                Ok(r) => rep.merge(r.with_prefix(&prefix)),
                Err(e) => rep.record(&format!("{prefix}ran"), Err(Witness::new(&[], e.to_string()))),
            }
        }
        rep
    }

    fn embedding(&self, w: &Watts, seed: u64) -> Result<CoherenceReport, WattsError> {
        let mut rep = verify_embedding(w, &self.sample, &self.sequences)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg: &Arc<_> = w.algebra();
        let out = roundtrip_on(&mut rng, self.name.clone(), alg, &self.sample)?;
        let detail = format!("hom recovered incorrectly for P of dim {} and Q of dim {}", out.p_dim, out.q_dim);
        rep.record("bimodule_hom_roundtrip", if out.recovered { Ok(()) } else { Err(Witness::new(&[], detail)) });
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_sets_parse() {
        assert_eq!("all".parse::<CheckSet>().unwrap(), CheckSet::all());
        let s: CheckSet = "axioms, t".parse().unwrap();
        assert_eq!(s, CheckSet::only(&[CheckGroup::Axioms, CheckGroup::T]));
        assert!("pentagons".parse::<CheckSet>().is_err());
        assert!("".parse::<CheckSet>().is_err());
    }

    #[test]
    fn groups_are_written_z_mod_n() {
        assert_eq!(parse_group("Z/3").unwrap(), 3);
        assert!(parse_group("Z3").is_err());
        assert!(parse_group("Z/0").is_err());
    }
}
