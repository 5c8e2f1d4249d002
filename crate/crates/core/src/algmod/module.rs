use std::fmt;
use std::sync::Arc;

use crate::exactla::{Field, Matrix, Quotient};

use super::algebra::combine;
use super::{AlgModError, Algebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Checks that `action` is a `side` action of `alg` on `K^dim`.
fn check_action(alg: &Algebra, side: Side, dim: usize, action: &[Matrix]) -> Result<(), AlgModError> {
    if action.len() != alg.dim() {
        return Err(AlgModError::Shape(format!("expected {} action matrices, got {}", alg.dim(), action.len())));
    }
    if let Some(m) = action.iter().find(|m| m.shape() != (dim, dim) || m.field() != alg.field()) {
        return Err(AlgModError::Shape(format!("action matrix of shape {:?} on a {dim}-dimensional space", m.shape())));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = combine(alg.field(), dim, &alg.basis_product(i, j), action);
            let rhs = match side {
                Side::Left => action[i].mul(&action[j]),
                Side::Right => action[j].mul(&action[i]),
            };
            if lhs != rhs {
                return Err(AlgModError::ActionLaw { side, i, j });
            }
        }
    }
    if !combine(alg.field(), dim, alg.unit(), action).is_identity() {
        return Err(AlgModError::UnitAction(side));
    }
    Ok(())
}

/// A finite-dimensional one-sided module; `action[i]` is the matrix of the
/// basis element `e_i` acting on the given side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    algebra: Arc<Algebra>,
    side: Side,
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    pub fn new(algebra: Arc<Algebra>, side: Side, dim: usize, action: Vec<Matrix>) -> Result<Self, AlgModError> {
        check_action(&algebra, side, dim, &action)?;
        Ok(Module { algebra, side, dim, action })
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, side: Side, dim: usize, action: Vec<Matrix>) -> Self {
        Module { algebra, side, dim, action }
    }

    pub fn regular_right(algebra: &Arc<Algebra>) -> Self {
        let action = algebra.right_mul().to_vec();
        Module { algebra: algebra.clone(), side: Side::Right, dim: algebra.dim(), action }
    }

    pub fn regular_left(algebra: &Arc<Algebra>) -> Self {
        let action = algebra.left_mul().to_vec();
        Module { algebra: algebra.clone(), side: Side::Left, dim: algebra.dim(), action }
    }

    pub fn zero(algebra: &Arc<Algebra>, side: Side) -> Self {
        let action = vec![Matrix::zeros(algebra.field(), 0, 0); algebra.dim()];
        Module { algebra: algebra.clone(), side, dim: 0, action }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Matrix of the algebra element `r` (a coordinate column) acting on this module.
    pub fn act(&self, r: &Matrix) -> Matrix {
        combine(self.field(), self.dim, r, &self.action)
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module, AlgModError> {
        self.compatible(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| block_diag(a, b)).collect();
        Ok(Module { algebra: self.algebra.clone(), side: self.side, dim: self.dim + other.dim, action })
    }

    /// Smallest submodule containing the given columns, as a matrix of basis columns.
    pub fn submodule_span(&self, generators: &Matrix) -> Matrix {
        let field = self.field();
        let mut span = generators.clone();
        loop {
            let mut blocks = vec![span.clone()];
            blocks.extend(self.action.iter().map(|a| a.mul(&span)));
            let all = Matrix::hstack(field, self.dim, &blocks);
            let (rref, pivots) = all.transpose().rref();
            let basis = rref.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose();
            if basis.cols() == span.rank() {
                return basis;
            }
            span = basis;
        }
    }

    /// Quotient by the submodule generated by `generators`, with the projection.
    pub fn quotient(&self, generators: &Matrix) -> (Module, Matrix) {
        let sub = self.submodule_span(generators);
        let q = Quotient::by_span(self.field(), self.dim, &sub);
        let action = self.action.iter().map(|a| q.induce(a)).collect();
        let module = Module { algebra: self.algebra.clone(), side: self.side, dim: q.dim(), action };
        (module, q.proj)
    }

    /// Submodule generated by `generators`, with its inclusion.
    pub fn submodule(&self, generators: &Matrix) -> (Module, Matrix) {
        let inc = self.submodule_span(generators);
        let action = self
            .action
            .iter()
            .map(|a| inc.solve(&a.mul(&inc)).expect("span is invariant"))
            .collect();
        let module = Module { algebra: self.algebra.clone(), side: self.side, dim: inc.cols(), action };
        (module, inc)
    }

    pub(crate) fn compatible(&self, other: &Module) -> Result<(), AlgModError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(AlgModError::AlgebraMismatch);
        }
        if self.side != other.side {
            return Err(AlgModError::SideMismatch);
        }
        Ok(())
    }
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    let (n, m) = (a.rows() + b.rows(), a.cols() + b.cols());
    let mut out = Matrix::zeros(f, n, m);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, &a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out.set(a.rows() + i, a.cols() + j, &b.get(i, j));
        }
    }
    out
}

/// A bimodule over a single algebra: commuting left and right actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    algebra: Arc<Algebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self, AlgModError> {
        check_action(&algebra, Side::Left, dim, &left)?;
        check_action(&algebra, Side::Right, dim, &right)?;
        for (i, l) in left.iter().enumerate() {
            for (j, r) in right.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(AlgModError::ActionsDoNotCommute { left: i, right: j });
                }
            }
        }
        Ok(Bimodule { algebra, dim, left, right })
    }

    /// `R` acting on itself from both sides.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        Bimodule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            left: algebra.left_mul().to_vec(),
            right: algebra.right_mul().to_vec(),
        }
    }

    /// `R ⊗_K R`, left action on the first factor, right action on the second.
    pub fn free(algebra: &Arc<Algebra>) -> Self {
        let f = algebra.field();
        let id = Matrix::identity(f, algebra.dim());
        Bimodule {
            algebra: algebra.clone(),
            dim: algebra.dim() * algebra.dim(),
            left: algebra.left_mul().iter().map(|l| l.kron(&id)).collect(),
            right: algebra.right_mul().iter().map(|r| id.kron(r)).collect(),
        }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let z = vec![Matrix::zeros(algebra.field(), 0, 0); algebra.dim()];
        Bimodule { algebra: algebra.clone(), dim: 0, left: z.clone(), right: z }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn as_left_module(&self) -> Module {
        Module::new_unchecked(self.algebra.clone(), Side::Left, self.dim, self.left.clone())
    }

    pub fn as_right_module(&self) -> Module {
        Module::new_unchecked(self.algebra.clone(), Side::Right, self.dim, self.right.clone())
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Bimodule, AlgModError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(AlgModError::AlgebraMismatch);
        }
        let sum = |a: &[Matrix], b: &[Matrix]| a.iter().zip(b).map(|(x, y)| block_diag(x, y)).collect();
        Ok(Bimodule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            left: sum(&self.left, &other.left),
            right: sum(&self.right, &other.right),
        })
    }

    /// Whether `f: self → target` commutes with both actions.
    pub fn is_hom(&self, target: &Bimodule, f: &Matrix) -> bool {
        f.shape() == (target.dim, self.dim)
            && intertwines(f, &self.left, &target.left)
            && intertwines(f, &self.right, &target.right)
    }
}

/// `f · a_i = b_i · f` for every `i`.
pub(crate) fn intertwines(f: &Matrix, a: &[Matrix], b: &[Matrix]) -> bool {
    a.iter().zip(b).all(|(a, b)| f.mul(a) == b.mul(f))
}

/// An equivariant linear map between one-sided modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Module,
    target: Module,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<Self, AlgModError> {
        source.compatible(&target)?;
        if matrix.shape() != (target.dim, source.dim) {
            return Err(AlgModError::Shape(format!(
                "map matrix {:?} between modules of dims {} and {}",
                matrix.shape(),
                source.dim,
                target.dim
            )));
        }
        if !intertwines(&matrix, &source.action, &target.action) {
            return Err(AlgModError::NotEquivariant);
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, matrix: Matrix) -> Self {
        ModuleMap { source, target, matrix }
    }

    pub fn identity(module: &Module) -> Self {
        let matrix = Matrix::identity(module.field(), module.dim);
        ModuleMap { source: module.clone(), target: module.clone(), matrix }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let matrix = Matrix::zeros(source.field(), target.dim, source.dim);
        ModuleMap { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMap) -> Result<ModuleMap, AlgModError> {
        if g.target != self.source {
            return Err(AlgModError::Shape("composing maps with mismatched modules".into()));
        }
        Ok(ModuleMap { source: g.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&g.matrix) })
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let inv = self.matrix.inverse()?;
        Some(ModuleMap { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }
}
