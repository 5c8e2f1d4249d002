use std::sync::Arc;

use crate::algmod::{Algebra, Module, ModuleMap};
use crate::exactla::{Field, Matrix};

use super::structure::MonoidalStructure;
use super::WattsError;

/// A deliberately broken structure: `id ⊙ g` is conjugated by a shear, so
/// `⊙` stops being a bifunctor while objects and structure maps are kept.
pub struct NonBifunctorial<M> {
    pub inner: M,
}

fn shear(field: Field, n: usize) -> Matrix {
    let mut p = Matrix::identity(field, n);
    if n >= 2 {
        p.set(0, n - 1, &field.one());
    }
    p
}

fn is_identity(f: &ModuleMap) -> bool {
    f.source() == f.target() && f.matrix().is_identity()
}

impl<M: MonoidalStructure> MonoidalStructure for NonBifunctorial<M> {
    fn algebra(&self) -> &Arc<Algebra> {
        self.inner.algebra()
    }

    fn unit(&self) -> Module {
        self.inner.unit()
    }

    fn tensor(&self, x: &Module, y: &Module) -> Result<Module, WattsError> {
        self.inner.tensor(x, y)
    }

    fn tensor_maps(&self, f: &ModuleMap, g: &ModuleMap) -> Result<Matrix, WattsError> {
        let m = self.inner.tensor_maps(f, g)?;
        if !is_identity(f) || is_identity(g) {
            return Ok(m);
        }
        let field = m.field();
        let p = shear(field, m.rows());
        let q = shear(field, m.cols()).inverse().expect("shears are invertible");
        Ok(p.mul(&m).mul(&q))
    }

    fn associator(&self, x: &Module, y: &Module, z: &Module) -> Result<Matrix, WattsError> {
        self.inner.associator(x, y, z)
    }

    fn left_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        self.inner.left_unitor(x)
    }

    fn right_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        self.inner.right_unitor(x)
    }
}
