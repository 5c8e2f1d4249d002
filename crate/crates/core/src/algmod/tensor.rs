use crate::exactla::{Field, LinearMap, Matrix, Quotient, VectorSpace};

use super::module::same_algebra;
use super::{AlgModError, Algebra, Bimodule, Module, Side};

/// `X ⊗_R Y` presented as a quotient of `X ⊗_K Y`.
///
/// Coordinates of `X ⊗_K Y` put `x_a ⊗ y_b` at `a * dim Y + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorProduct {
    left_dim: usize,
    right_dim: usize,
    quotient: Quotient,
}

impl TensorProduct {
    /// Cokernel of `x r ⊗ y − x ⊗ r y` for right action matrices `right`
    /// on the first factor and left action matrices `left` on the second.
    pub(crate) fn from_actions(field: Field, right: &[Matrix], left: &[Matrix], dx: usize, dy: usize) -> Self {
        let (ix, iy) = (Matrix::identity(field, dx), Matrix::identity(field, dy));
        let relations: Vec<Matrix> = right
            .iter()
            .zip(left)
            .map(|(r, l)| r.kron(&iy).sub(&ix.kron(l)))
            .collect();
        let spanning = Matrix::hstack(field, dx * dy, &relations);
        TensorProduct { left_dim: dx, right_dim: dy, quotient: Quotient::by_span(field, dx * dy, &spanning) }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// `X ⊗_K Y → X ⊗_R Y`.
    pub fn proj(&self) -> &Matrix {
        &self.quotient.proj
    }

    /// Canonical representatives `X ⊗_R Y → X ⊗_K Y`.
    pub fn lift(&self) -> &Matrix {
        &self.quotient.lift
    }

    /// The quotient space with the projection from `X ⊗_K Y`.
    pub fn projection(&self) -> LinearMap {
        let source = VectorSpace::standard("x", self.left_dim).tensor(&VectorSpace::standard("y", self.right_dim));
        LinearMap::new(source, VectorSpace::standard("t", self.dim()), self.quotient.proj.clone())
            .expect("projection has matching shape")
    }

    /// `a ⊗ id` on the quotient, for `a` compatible with the relations.
    pub fn induce_left(&self, a: &Matrix) -> Matrix {
        let id = Matrix::identity(a.field(), self.right_dim);
        self.quotient.induce(&a.kron(&id))
    }

    /// `id ⊗ b` on the quotient.
    pub fn induce_right(&self, b: &Matrix) -> Matrix {
        let id = Matrix::identity(b.field(), self.left_dim);
        self.quotient.induce(&id.kron(b))
    }

    /// `f ⊗ g: self → target`.
    pub fn map_to(&self, target: &TensorProduct, f: &Matrix, g: &Matrix) -> Matrix {
        target.proj().mul(&f.kron(g)).mul(self.lift())
    }
}

/// `X ⊗_R Y` for a right module `X` and a left module `Y`.
pub fn tensor_over_r(x: &Module, y: &Module) -> Result<TensorProduct, AlgModError> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(AlgModError::AlgebraMismatch);
    }
    if x.side() != Side::Right || y.side() != Side::Left {
        return Err(AlgModError::SideMismatch);
    }
    Ok(TensorProduct::from_actions(x.field(), x.action(), y.action(), x.dim(), y.dim()))
}

/// `M ⊗_R N` with the outer actions, together with its presentation.
pub fn bimodule_tensor(m: &Bimodule, n: &Bimodule) -> Result<(Bimodule, TensorProduct), AlgModError> {
    let tp = tensor_over_r(&m.as_right_module(), &n.as_left_module())?;
    let left = m.left().iter().map(|l| tp.induce_left(l)).collect();
    let right = n.right().iter().map(|r| tp.induce_right(r)).collect();
    let b = Bimodule::new(m.algebra().clone(), tp.dim(), left, right)?;
    Ok((b, tp))
}

/// `r ⊗ y ↦ r y` as a matrix on `R ⊗_R Y`, for left action matrices of `Y`.
pub(crate) fn left_unit_matrix(alg: &Algebra, tp: &TensorProduct, left: &[Matrix], dy: usize) -> Matrix {
    // column a*dy + b of the K-level map is left[a] e_b
    let k_level = Matrix::hstack(alg.field(), dy, left);
    k_level.mul(tp.lift())
}

/// `x ⊗ r ↦ x r` as a matrix on `X ⊗_R R`, for right action matrices of `X`.
pub(crate) fn right_unit_matrix(alg: &Algebra, tp: &TensorProduct, right: &[Matrix], dx: usize) -> Matrix {
    let f = alg.field();
    let cols: Vec<Matrix> = (0..dx)
        .flat_map(|a| right.iter().map(move |r| r.col(a)))
        .collect();
    Matrix::hstack(f, dx, &cols).mul(tp.lift())
}

/// The canonical isomorphism `R ⊗_R M → M`.
pub fn left_unit_iso(m: &Bimodule) -> Result<(TensorProduct, Matrix), AlgModError> {
    let r = Bimodule::regular(m.algebra());
    let tp = tensor_over_r(&r.as_right_module(), &m.as_left_module())?;
    let u = left_unit_matrix(m.algebra(), &tp, m.left(), m.dim());
    Ok((tp, u))
}

/// The canonical isomorphism `M ⊗_R R → M`.
pub fn right_unit_iso(m: &Bimodule) -> Result<(TensorProduct, Matrix), AlgModError> {
    let r = Bimodule::regular(m.algebra());
    let tp = tensor_over_r(&m.as_right_module(), &r.as_left_module())?;
    let u = right_unit_matrix(m.algebra(), &tp, m.right(), m.dim());
    Ok((tp, u))
}

/// The rebracketing `(M ⊗ N) ⊗ P → M ⊗ (N ⊗ P)` on canonical bases.
pub fn bimodule_associator(m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<Matrix, AlgModError> {
    let f = m.field();
    let (mn, q_mn) = bimodule_tensor(m, n)?;
    let (_, q_mn_p) = bimodule_tensor(&mn, p)?;
    let (np, q_np) = bimodule_tensor(n, p)?;
    let (_, q_m_np) = bimodule_tensor(m, &np)?;
    let to_flat = q_mn.lift().kron(&Matrix::identity(f, p.dim())).mul(q_mn_p.lift());
    let from_flat = q_m_np.proj().mul(&Matrix::identity(f, m.dim()).kron(q_np.proj()));
    Ok(from_flat.mul(&to_flat))
}

/// Iterated tensor `M_1 ⊗_R ... ⊗_R M_k` presented directly as one quotient
/// of `M_1 ⊗_K ... ⊗_K M_k`; the bracketing-free normal form.
pub fn bimodule_tensor_chain(factors: &[Bimodule]) -> Result<(Bimodule, Quotient), AlgModError> {
    let first = factors.first().ok_or_else(|| AlgModError::Shape("empty tensor chain".into()))?;
    let alg = first.algebra().clone();
    if factors.iter().any(|b| !same_algebra(b.algebra(), &alg)) {
        return Err(AlgModError::AlgebraMismatch);
    }
    let f = alg.field();
    let dims: Vec<usize> = factors.iter().map(Bimodule::dim).collect();
    let total: usize = dims.iter().product();
    let id = |n: usize| Matrix::identity(f, n);
    let mut relations = Vec::new();
    for p in 0..factors.len().saturating_sub(1) {
        let before: usize = dims[..p].iter().product();
        let after: usize = dims[p + 2..].iter().product();
        for (r, l) in factors[p].right().iter().zip(factors[p + 1].left()) {
            let middle = r.kron(&id(dims[p + 1])).sub(&id(dims[p]).kron(l));
            relations.push(id(before).kron(&middle).kron(&id(after)));
        }
    }
    let q = Quotient::by_span(f, total, &Matrix::hstack(f, total, &relations));
    let rest: usize = dims[1..].iter().product();
    let last = factors.last().expect("non-empty");
    let head: usize = dims[..dims.len() - 1].iter().product();
    let left = first.left().iter().map(|l| q.induce(&l.kron(&id(rest)))).collect();
    let right = last.right().iter().map(|r| q.induce(&id(head).kron(r))).collect();
    let b = Bimodule::new(alg, q.dim(), left, right)?;
    Ok((b, q))
}
