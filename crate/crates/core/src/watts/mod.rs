//! Monoidal structures on categories of right modules and the Watts-type
//! reconstruction of such a structure as a tensor product over `R` with a
//! bimodule.
//!
//! A [`MonoidalStructure`] supplies the tensor product of modules, of maps,
//! and the structure isomorphisms. [`Watts`] builds the bimodule `T = R ⊙ R`,
//! the functor `ω(X) = X ⊗_R T`, the comparison isomorphisms
//! `c: X ⊗_R ω(Y) → X ⊙ Y`, and the transported structure on bimodules.

mod checks;
mod engine;
mod graded;
mod natural;
mod memo;
mod mutate;
mod structure;

use thiserror::Error;

use crate::algmod::AlgModError;
use crate::exactla::LinAlgError;

pub use checks::{
    check_monoidal_axioms, check_rigidity, check_t_coherence, verify_embedding, verify_monoidal_functor, RigidityData, Sample, Sequence,
};
pub use engine::{Omega, Transported, TripleModule, Watts};
pub use graded::GradedTensor;
pub use natural::{induced_family, nat_to_bimodule_hom, random_algebra, roundtrip_on, roundtrip_trial, RoundtripOutcome};
pub use mutate::NonBifunctorial;
pub use structure::{left_multiplication_map, MonoidalStructure};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WattsError {
    #[error("malformed tensor structure: {0}")]
    MalformedTensor(String),
    #[error("actions on T = R ⊙ R do not commute: {0}")]
    ActionClash(String),
    #[error("{map} is not invertible at ({objects})")]
    NotInvertible { map: String, objects: String },
    #[error("family is not natural: {0}")]
    NotNatural(String),
    #[error("recovered map is not a bimodule map: {0}")]
    NotBalanced(String),
    #[error("invalid grading data: {0}")]
    Grading(String),
    #[error(transparent)]
    AlgMod(#[from] AlgModError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
