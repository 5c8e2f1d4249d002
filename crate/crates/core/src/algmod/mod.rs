//! Finite-dimensional algebras, their modules and bimodules, tensor products
//! over the algebra, and spaces of homomorphisms.

mod algebra;
mod hom;
mod module;
mod serial;
mod tensor;

use thiserror::Error;

use crate::exactla::LinAlgError;

pub use algebra::Algebra;
pub use hom::{hom_bimodules, hom_modules, HomSpace};
pub use module::{Bimodule, Module, ModuleMap, Side};
pub use serial::{matrix_from_raw, matrix_to_raw, AlgebraSpec, BimoduleSpec, ModuleSpec, RawMatrix, SideSpec};
pub use tensor::{
    bimodule_associator, bimodule_tensor, bimodule_tensor_chain, left_unit_iso, right_unit_iso, tensor_over_r,
    TensorProduct,
};

pub(crate) use algebra::combine;
pub(crate) use module::intertwines;
pub(crate) use tensor::left_unit_matrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgModError {
    #[error("multiplication is not associative on (e{i}, e{j}, e{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit law fails on e{0}")]
    UnitLaw(usize),
    #[error("{side} action does not respect the product e{i}·e{j}")]
    ActionLaw { side: Side, i: usize, j: usize },
    #[error("{0} action of the unit is not the identity")]
    UnitAction(Side),
    #[error("left action of e{left} does not commute with right action of e{right}")]
    ActionsDoNotCommute { left: usize, right: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("modules act from incompatible sides")]
    SideMismatch,
    #[error("map is not a module homomorphism")]
    NotEquivariant,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Whether a module or bimodule is the zero object.
pub fn is_zero<M: HasDim>(m: &M) -> bool {
    m.underlying_dim() == 0
}

/// Anything with an underlying finite-dimensional space.
pub trait HasDim {
    fn underlying_dim(&self) -> usize;
}

impl HasDim for Module {
    fn underlying_dim(&self) -> usize {
        self.dim()
    }
}

impl HasDim for Bimodule {
    fn underlying_dim(&self) -> usize {
        self.dim()
    }
}
