//! Monoidal categories, their bimodule embeddings, and fusion-ring bookkeeping,
//! all computed with exact arithmetic.
//!
//! * [`exactla`]: matrices over `Q` and `F_p`.
//! * [`algmod`]: finite-dimensional algebras, modules, bimodules, `⊗_R`, `Hom_R`.
//! * [`watts`]: a monoidal structure on right modules, the triple module
//!   `T = R⊙R`, and the monoidal embedding into bimodules with all coherence checks.
//! * [`fixtures`]: loading bundled and user fixture files.
//! * [`fusion`]: semisimple fusion data, block-matrix images and growth bounds.
//! * [`report`]: the shared pass/fail report format.

pub mod algmod;
pub mod exactla;
pub mod expr;
pub mod fixtures;
pub mod fusion;
pub mod report;
pub mod watts;

pub use exactla::{Field, LinAlgError, LinearMap, Matrix, Scalar, VectorSpace};
