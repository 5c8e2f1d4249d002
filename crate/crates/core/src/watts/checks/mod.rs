mod axioms;
mod embedding;
mod functor;
mod rigidity;
mod transport;

use crate::algmod::{Module, ModuleMap};
use crate::exactla::Matrix;

pub use axioms::check_monoidal_axioms;
pub use embedding::verify_embedding;
pub use functor::verify_monoidal_functor;
pub use rigidity::check_rigidity;
pub use transport::check_t_coherence;

/// Named objects the checks range over.
pub type Sample = [(String, Module)];

/// `A --f--> B --g--> C`, claimed exact at `B` with `g` onto, and with `f`
/// injective when `short_exact` is set.
#[derive(Clone, Debug)]
pub struct Sequence {
    pub name: String,
    pub f: ModuleMap,
    pub g: ModuleMap,
    pub short_exact: bool,
}

/// A claimed duality `(X, X*, ev: X* ⊙ X → I, db: I → X ⊙ X*)`.
#[derive(Clone, Debug)]
pub struct RigidityData {
    pub object: String,
    pub x: Module,
    pub dual: Module,
    pub ev: Matrix,
    pub db: Matrix,
}
