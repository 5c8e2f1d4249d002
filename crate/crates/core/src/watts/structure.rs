use std::sync::Arc;

use crate::algmod::{Algebra, Module, ModuleMap};
use crate::exactla::Matrix;

use super::WattsError;

/// A monoidal structure on finite-dimensional right `R`-modules.
///
/// Matrices of maps are taken in the canonical bases of the modules the
/// structure returns from [`MonoidalStructure::tensor`].
pub trait MonoidalStructure: Send + Sync {
    fn algebra(&self) -> &Arc<Algebra>;

    fn unit(&self) -> Module;

    fn tensor(&self, x: &Module, y: &Module) -> Result<Module, WattsError>;

    /// Matrix of `f ⊙ g: X ⊙ Y → X' ⊙ Y'`.
    fn tensor_maps(&self, f: &ModuleMap, g: &ModuleMap) -> Result<Matrix, WattsError>;

    /// `α_{X,Y,Z}: (X ⊙ Y) ⊙ Z → X ⊙ (Y ⊙ Z)`.
    fn associator(&self, x: &Module, y: &Module, z: &Module) -> Result<Matrix, WattsError>;

    /// `λ_X: I ⊙ X → X`.
    fn left_unitor(&self, x: &Module) -> Result<Matrix, WattsError>;

    /// `ρ_X: X ⊙ I → X`.
    fn right_unitor(&self, x: &Module) -> Result<Matrix, WattsError>;

    /// The regular right module `R_R`.
    fn regular(&self) -> Module {
        Module::regular_right(self.algebra())
    }

    /// `f ⊙ g` with its source and target attached.
    fn tensor_map(&self, f: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap, WattsError> {
        let source = self.tensor(f.source(), g.source())?;
        let target = self.tensor(f.target(), g.target())?;
        let m = self.tensor_maps(f, g)?;
        Ok(ModuleMap::new_unchecked(source, target, m))
    }

    /// `f ⊙ id_Z`.
    fn tensor_id(&self, f: &ModuleMap, z: &Module) -> Result<Matrix, WattsError> {
        self.tensor_maps(f, &ModuleMap::identity(z))
    }

    /// `id_X ⊙ g`.
    fn id_tensor(&self, x: &Module, g: &ModuleMap) -> Result<Matrix, WattsError> {
        self.tensor_maps(&ModuleMap::identity(x), g)
    }
}

/// `l_r: R → R, s ↦ r s` for the basis element `r = e_i`; a map of right modules.
pub fn left_multiplication_map(algebra: &Arc<Algebra>, i: usize) -> ModuleMap {
    let r = Module::regular_right(algebra);
    ModuleMap::new_unchecked(r.clone(), r, algebra.left_mul()[i].clone())
}

/// Wraps a matrix between two modules as a map without re-checking equivariance.
pub(crate) fn as_map(source: &Module, target: &Module, m: Matrix) -> ModuleMap {
    ModuleMap::new_unchecked(source.clone(), target.clone(), m)
}

/// Inverse of a structure component or a [`WattsError::NotInvertible`].
pub(crate) fn invert(m: &Matrix, map: &str, objects: &[&str]) -> Result<Matrix, WattsError> {
    m.inverse().ok_or_else(|| WattsError::NotInvertible { map: map.to_string(), objects: objects.join(", ") })
}
