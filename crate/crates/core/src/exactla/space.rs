use super::{Field, LinAlgError, Matrix};

/// A finite-dimensional space with an ordered basis of opaque labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorSpace {
    basis: Vec<String>,
}

impl VectorSpace {
    pub fn new(basis: Vec<String>) -> Self {
        VectorSpace { basis }
    }

    /// `K^n` with basis `prefix0, prefix1, ...`.
    pub fn standard(prefix: &str, n: usize) -> Self {
        VectorSpace { basis: (0..n).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// Basis of `self ⊗ other`, ordered so `(i, j)` sits at `i * other.dim() + j`.
    pub fn tensor(&self, other: &VectorSpace) -> VectorSpace {
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        VectorSpace { basis }
    }
}

/// A linear map given by its matrix on the chosen bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: VectorSpace,
    target: VectorSpace,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: VectorSpace, target: VectorSpace, matrix: Matrix) -> Result<Self, LinAlgError> {
        if matrix.rows() != target.dim() {
            return Err(LinAlgError::DimensionMismatch { expected: target.dim(), found: matrix.rows() });
        }
        if matrix.cols() != source.dim() {
            return Err(LinAlgError::DimensionMismatch { expected: source.dim(), found: matrix.cols() });
        }
        Ok(LinearMap { source, target, matrix })
    }

    /// Wraps a bare matrix with standard bases.
    pub fn from_matrix(matrix: Matrix) -> Self {
        LinearMap {
            source: VectorSpace::standard("e", matrix.cols()),
            target: VectorSpace::standard("e", matrix.rows()),
            matrix,
        }
    }

    pub fn identity(field: Field, space: VectorSpace) -> Self {
        let matrix = Matrix::identity(field, space.dim());
        LinearMap { source: space.clone(), target: space, matrix }
    }

    pub fn zero(field: Field, source: VectorSpace, target: VectorSpace) -> Self {
        let matrix = Matrix::zeros(field, target.dim(), source.dim());
        LinearMap { source, target, matrix }
    }

    pub fn source(&self) -> &VectorSpace {
        &self.source
    }

    pub fn target(&self) -> &VectorSpace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, LinAlgError> {
        if g.target.dim() != self.source.dim() {
            return Err(LinAlgError::DimensionMismatch { expected: self.source.dim(), found: g.target.dim() });
        }
        Ok(LinearMap {
            source: g.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.checked_mul(&g.matrix)?,
        })
    }

    /// The kernel as a space together with its inclusion into the source.
    pub fn kernel(&self) -> (VectorSpace, LinearMap) {
        let basis = self.matrix.kernel();
        let space = VectorSpace::standard("k", basis.cols());
        let inclusion = LinearMap { source: space.clone(), target: self.source.clone(), matrix: basis };
        (space, inclusion)
    }

    /// The two-sided inverse.
    pub fn solve_iso(&self) -> Result<LinearMap, LinAlgError> {
        let not_invertible = || LinAlgError::NotInvertible {
            rank: self.matrix.rank(),
            source_dim: self.source.dim(),
            target_dim: self.target.dim(),
        };
        if self.source.dim() != self.target.dim() {
            return Err(not_invertible());
        }
        let inv = self.matrix.inverse().ok_or_else(not_invertible)?;
        Ok(LinearMap { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        LinearMap {
            source: self.source.tensor(&g.source),
            target: self.target.tensor(&g.target),
            matrix: self.matrix.kron(&g.matrix),
        }
    }
}
