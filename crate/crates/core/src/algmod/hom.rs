use crate::exactla::{Field, Matrix};

use super::module::same_algebra;
use super::{AlgModError, Bimodule, Module, ModuleMap};

/// A basis of `Hom(X, Y)` between modules on the same side.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> Vec<ModuleMap> {
        self.basis
            .iter()
            .map(|m| ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), m.clone()))
            .collect()
    }

    /// `Σ coeffs[i] · basis[i]`.
    pub fn combination(&self, coeffs: &[crate::exactla::Scalar]) -> Matrix {
        let f = self.source.field();
        let mut out = Matrix::zeros(f, self.target.dim(), self.source.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(c));
        }
        out
    }
}

/// Matrices `F` (`n × m`) with `F a_i = b_i F` for all pairs of action matrices.
fn intertwiners(field: Field, m: usize, n: usize, pairs: &[(&[Matrix], &[Matrix])]) -> Vec<Matrix> {
    // row-major vec(F A) = (I ⊗ Aᵀ) vec F and vec(B F) = (B ⊗ I) vec F
    let (im, in_) = (Matrix::identity(field, m), Matrix::identity(field, n));
    let mut eqs = Vec::new();
    for (a, b) in pairs {
        for (a, b) in a.iter().zip(b.iter()) {
            eqs.push(in_.kron(&a.transpose()).sub(&b.kron(&im)));
        }
    }
    let system = Matrix::vstack(field, n * m, &eqs);
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|c| Matrix::from_fn(field, n, m, |i, j| kernel.get(i * m + j, c)))
        .collect()
}

/// Basis of the space of module homomorphisms `X → Y`.
pub fn hom_modules(x: &Module, y: &Module) -> Result<HomSpace, AlgModError> {
    x.compatible(y)?;
    let basis = intertwiners(x.field(), x.dim(), y.dim(), &[(x.action(), y.action())]);
    Ok(HomSpace { source: x.clone(), target: y.clone(), basis })
}

/// Basis of the space of bimodule homomorphisms `M → N`.
pub fn hom_bimodules(m: &Bimodule, n: &Bimodule) -> Result<Vec<Matrix>, AlgModError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(AlgModError::AlgebraMismatch);
    }
    Ok(intertwiners(m.field(), m.dim(), n.dim(), &[(m.left(), n.left()), (m.right(), n.right())]))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algmod::{Algebra, Side};

    #[test]
    fn hom_from_regular_is_the_module() {
        let alg = Arc::new(Algebra::upper_triangular(Field::Prime(3)));
        let r = Module::regular_right(&alg);
        let free = Bimodule::free(&alg).as_right_module();
        assert_eq!(hom_modules(&r, &free).unwrap().dim(), free.dim());
        assert_eq!(hom_modules(&r, &r).unwrap().dim(), 3);
    }

    #[test]
    fn schur_for_distinct_simples() {
        let f = Field::Rational;
        let k = Algebra::ground(f);
        let alg = Arc::new(Algebra::product(&[k.clone(), k]).unwrap());
        let (one, zero) = (Matrix::identity(f, 1), Matrix::zeros(f, 1, 1));
        let a = Module::new(alg.clone(), Side::Right, 1, vec![one.clone(), zero.clone()]).unwrap();
        let b = Module::new(alg, Side::Right, 1, vec![zero, one]).unwrap();
        assert_eq!(hom_modules(&a, &b).unwrap().dim(), 0);
        assert_eq!(hom_modules(&a, &a).unwrap().dim(), 1);
    }

    #[test]
    fn residue_field_into_dual_numbers() {
        let f = Field::Prime(2);
        let alg = Arc::new(Algebra::truncated_polynomial(f, 2));
        let r = Module::regular_right(&alg);
        let (k, _) = r.quotient(&alg.basis_element(1));
        let hom = hom_modules(&k, &r).unwrap();
        assert_eq!(hom.dim(), 1);
        for map in hom.maps() {
            assert!(ModuleMap::new(map.source().clone(), map.target().clone(), map.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn bimodule_endomorphisms_of_regular_are_the_centre() {
        let f = Field::Prime(3);
        let m2 = Arc::new(Algebra::matrix_algebra(f, 2));
        let r = Bimodule::regular(&m2);
        assert_eq!(hom_bimodules(&r, &r).unwrap().len(), 1);
        let comm = Arc::new(Algebra::cyclic_group(f, 3));
        let r = Bimodule::regular(&comm);
        assert_eq!(hom_bimodules(&r, &r).unwrap().len(), 3);
    }
}
