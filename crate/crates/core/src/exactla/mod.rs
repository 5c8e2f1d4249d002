//! Exact linear algebra over the rationals and small prime fields.
//!
//! Every equality in the toolkit is decided here by exact arithmetic: there is
//! no floating point and no tolerance anywhere.

mod field;
mod matrix;
mod quotient;
mod space;

pub use field::{Field, RawScalar, Scalar, MAX_PRIME};
pub use matrix::Matrix;
pub use quotient::Quotient;
pub use space::{LinearMap, VectorSpace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("map is not invertible (rank {rank}, source dim {source_dim}, target dim {target_dim})")]
    NotInvertible { rank: usize, source_dim: usize, target_dim: usize },
    #[error("unsupported field characteristic {0} (need 0 or a prime <= 97)")]
    UnsupportedField(u32),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
