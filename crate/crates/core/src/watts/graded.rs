use std::sync::Arc;

use crate::algmod::{Algebra, Module, ModuleMap, Side, TensorProduct};
use crate::exactla::{Field, Matrix, Quotient, Scalar};

use super::memo::Memo;
use super::structure::MonoidalStructure;
use super::WattsError;

/// Graded tensor product over a commutative base algebra `S`.
///
/// For the group `Z/n` and ideals `J_g` of `S` with `J_0 = 0` and
/// `J_{a+b} ⊆ J_a + J_b`, the category is modules over `R = Π_g S/J_g`,
/// i.e. `Z/n`-graded `S`-modules whose degree-`g` part is killed by `J_g`.
/// The product is `(X ⊙ Y)_g = ⊕_{a+b=g} X_a ⊗_S Y_b` and the associator
/// is the scalar `ω(a, b, c)` on `X_a ⊗ Y_b ⊗ Z_c`.
///
/// With `n = 1` this is the plain tensor product over `S` with identity
/// associator.
pub struct GradedTensor {
    base: Arc<Algebra>,
    algebra: Arc<Algebra>,
    order: usize,
    cocycle: Vec<Scalar>,
    ideals: Vec<Vec<Matrix>>,
    /// Canonical lifts `S/J_g → S`, one per degree.
    lifts: Vec<Matrix>,
    /// `ι: S → R` as a `dim R × dim S` matrix.
    iota: Matrix,
    idempotents: Vec<Matrix>,
    cache: Memo<(Module, Module), (Module, TensorProduct)>,
}

impl GradedTensor {
    /// The ordinary tensor product over a commutative algebra.
    pub fn strict(base: Algebra) -> Result<Self, WattsError> {
        let one = base.field().one();
        GradedTensor::new(base, 1, vec![one], vec![Vec::new()])
    }

    /// `ideals[g]` lists generators of `J_g` as columns in the basis of `S`;
    /// `cocycle[(a * n + b) * n + c] = ω(a, b, c)`.
    pub fn new(base: Algebra, order: usize, cocycle: Vec<Scalar>, ideals: Vec<Vec<Matrix>>) -> Result<Self, WattsError> {
        let field = base.field();
        let bad = |m: String| Err(WattsError::Grading(m));
        if order == 0 {
            return bad("the grading group must be nontrivial".into());
        }
        if !base.is_commutative() {
            return bad("the base algebra must be commutative".into());
        }
        if cocycle.len() != order.pow(3) {
            return bad(format!("expected {} cocycle values, found {}", order.pow(3), cocycle.len()));
        }
        if cocycle.iter().any(|c| c.field() != field) {
            return bad("cocycle values lie in a different field".into());
        }
        if ideals.len() != order {
            return bad(format!("expected {order} ideals, found {}", ideals.len()));
        }
        let s = base.dim();
        if ideals.iter().flatten().any(|g| g.shape() != (s, 1)) {
            return bad(format!("ideal generators must be columns of length {s}"));
        }
        let spans: Vec<Matrix> = ideals.iter().map(|gens| base.ideal_span(gens)).collect();
        if spans[0].rank() != 0 {
            return bad("the degree-0 ideal must vanish".into());
        }
        for a in 0..order {
            for b in 0..order {
                let ab = &spans[(a + b) % order];
                let sum = Matrix::hstack(field, s, &[spans[a].clone(), spans[b].clone()]);
                let with = Matrix::hstack(field, s, &[sum.clone(), ab.clone()]);
                if with.rank() != sum.rank() {
                    return bad(format!("J_{} is not contained in J_{a} + J_{b}", (a + b) % order));
                }
            }
        }

        let mut parts = Vec::with_capacity(order);
        let mut lifts = Vec::with_capacity(order);
        let mut projs = Vec::with_capacity(order);
        for gens in &ideals {
            let (q, proj) = base.quotient(gens)?;
            let lift = Quotient::by_span(field, s, &base.ideal_span(gens)).lift;
            parts.push(q);
            projs.push(proj);
            lifts.push(lift);
        }
        let algebra = Arc::new(Algebra::product(&parts)?);
        let mut offsets = Vec::with_capacity(order);
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.dim();
        }
        let iota = Matrix::vstack(field, s, &projs);
        let idempotents = (0..order)
            .map(|g| {
                let mut e = Matrix::zeros(field, algebra.dim(), 1);
                let u = parts[g].unit();
                for t in 0..parts[g].dim() {
                    e.set(offsets[g] + t, 0, &u.get(t, 0));
                }
                e
            })
            .collect();

        Ok(GradedTensor {
            base: Arc::new(base),
            algebra,
            order,
            cocycle,
            ideals,
            lifts,
            iota,
            idempotents,
            cache: Memo::new(),
        })
    }

    /// The same grading data with a different cocycle.
    pub fn with_cocycle(&self, cocycle: Vec<Scalar>) -> Result<Self, WattsError> {
        GradedTensor::new((*self.base).clone(), self.order, cocycle, self.ideals.clone())
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Order of the grading group `Z/n`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cocycle(&self) -> &[Scalar] {
        &self.cocycle
    }

    pub fn omega(&self, a: usize, b: usize, c: usize) -> &Scalar {
        let n = self.order;
        &self.cocycle[(a * n + b) * n + c]
    }

    /// `ι: S → R` sending `s` to `(s mod J_g)_g`.
    pub fn iota(&self) -> &Matrix {
        &self.iota
    }

    /// The central idempotent of `R` cutting out degree `g`.
    pub fn idempotent(&self, g: usize) -> &Matrix {
        &self.idempotents[g]
    }

    /// An `S/J_g`-module concentrated in degree `g`, from the action matrices
    /// of the basis of `S`.
    pub fn graded_module(&self, degree: usize, dim: usize, base_action: &[Matrix]) -> Result<Module, WattsError> {
        if degree >= self.order {
            return Err(WattsError::Grading(format!("degree {degree} outside Z/{}", self.order)));
        }
        if base_action.len() != self.base.dim() {
            return Err(WattsError::Grading(format!("expected {} action matrices for S", self.base.dim())));
        }
        let field = self.field();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for g in 0..self.order {
            for t in 0..self.lifts[g].cols() {
                action.push(if g == degree {
                    crate::algmod::combine(field, dim, &self.lifts[g].col(t), base_action)
                } else {
                    Matrix::zeros(field, dim, dim)
                });
            }
        }
        Module::new(self.algebra.clone(), Side::Right, dim, action)
            .map_err(|e| WattsError::Grading(format!("not a module over S/J_{degree}: {e}")))
    }

    pub fn describe(&self) -> String {
        if self.order == 1 {
            format!("tensor over S (dim S = {})", self.base.dim())
        } else {
            format!("Z/{}-graded tensor over S (dim S = {}, dim R = {})", self.order, self.base.dim(), self.algebra.dim())
        }
    }

    /// Action of `ι(s_i)` for each basis element `s_i` of `S`.
    fn base_action(&self, x: &Module) -> Vec<Matrix> {
        (0..self.base.dim()).map(|i| x.act(&self.iota.col(i))).collect()
    }

    fn projectors(&self, x: &Module) -> Vec<Matrix> {
        self.idempotents.iter().map(|e| x.act(e)).collect()
    }

    fn check_module(&self, x: &Module) -> Result<(), WattsError> {
        if !Arc::ptr_eq(x.algebra(), &self.algebra) && **x.algebra() != *self.algebra {
            return Err(crate::algmod::AlgModError::AlgebraMismatch.into());
        }
        if x.side() != Side::Right {
            return Err(crate::algmod::AlgModError::SideMismatch.into());
        }
        Ok(())
    }

    fn product(&self, x: &Module, y: &Module) -> Result<Arc<(Module, TensorProduct)>, WattsError> {
        self.check_module(x)?;
        self.check_module(y)?;
        self.cache.get_or_try(&(x.clone(), y.clone()), || {
            let field = self.field();
            let (dx, dy) = (x.dim(), y.dim());
            let tp = TensorProduct::from_actions(field, &self.base_action(x), &self.base_action(y), dx, dy);
            let (px, py) = (self.projectors(x), self.projectors(y));
            let iy = Matrix::identity(field, dy);
            let mut action = Vec::with_capacity(self.algebra.dim());
            for g in 0..self.order {
                let mut proj = Matrix::zeros(field, dx * dy, dx * dy);
                for a in 0..self.order {
                    let b = (g + self.order - a) % self.order;
                    proj = proj.add(&px[a].kron(&py[b]));
                }
                for t in 0..self.lifts[g].cols() {
                    let r = self.iota.mul(&self.lifts[g].col(t));
                    action.push(tp.quotient().induce(&x.act(&r).kron(&iy).mul(&proj)));
                }
            }
            let m = Module::new(self.algebra.clone(), Side::Right, tp.dim(), action)?;
            Ok((m, tp))
        })
    }

    /// The presentation of `X ⊙ Y` as a quotient of `X ⊗_K Y`.
    pub fn presentation(&self, x: &Module, y: &Module) -> Result<TensorProduct, WattsError> {
        Ok(self.product(x, y)?.1.clone())
    }
}

impl MonoidalStructure for GradedTensor {
    fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    fn unit(&self) -> Module {
        let field = self.field();
        let s = self.base.dim();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for g in 0..self.order {
            for t in 0..self.lifts[g].cols() {
                action.push(if g == 0 {
                    self.base.right_multiplication(&self.lifts[0].col(t))
                } else {
                    Matrix::zeros(field, s, s)
                });
            }
        }
        Module::new(self.algebra.clone(), Side::Right, s, action).expect("S in degree 0 is an R-module")
    }

    fn tensor(&self, x: &Module, y: &Module) -> Result<Module, WattsError> {
        Ok(self.product(x, y)?.0.clone())
    }

    fn tensor_maps(&self, f: &ModuleMap, g: &ModuleMap) -> Result<Matrix, WattsError> {
        let source = self.product(f.source(), g.source())?;
        let target = self.product(f.target(), g.target())?;
        Ok(source.1.map_to(&target.1, f.matrix(), g.matrix()))
    }

    fn associator(&self, x: &Module, y: &Module, z: &Module) -> Result<Matrix, WattsError> {
        let field = self.field();
        let xy = self.product(x, y)?;
        let xy_z = self.product(&xy.0, z)?;
        let yz = self.product(y, z)?;
        let x_yz = self.product(x, &yz.0)?;
        let (px, py, pz) = (self.projectors(x), self.projectors(y), self.projectors(z));
        let d = x.dim() * y.dim() * z.dim();
        let mut twist = Matrix::zeros(field, d, d);
        for a in 0..self.order {
            for b in 0..self.order {
                for c in 0..self.order {
                    let w = self.omega(a, b, c);
                    if !w.is_zero() {
                        twist = twist.add(&px[a].kron(&py[b]).kron(&pz[c]).scale(w));
                    }
                }
            }
        }
        let ix = Matrix::identity(field, x.dim());
        let iz = Matrix::identity(field, z.dim());
        Ok(x_yz
            .1
            .proj()
            .mul(&ix.kron(yz.1.proj()))
            .mul(&twist)
            .mul(&xy.1.lift().kron(&iz))
            .mul(xy_z.1.lift()))
    }

    fn left_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        let i = self.unit();
        let ix = self.product(&i, x)?;
        Ok(Matrix::hstack(self.field(), x.dim(), &self.base_action(x)).mul(ix.1.lift()))
    }

    fn right_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        let i = self.unit();
        let xi = self.product(x, &i)?;
        let acts = self.base_action(x);
        let cols: Vec<Matrix> = (0..x.dim()).flat_map(|a| acts.iter().map(move |m| m.col(a))).collect();
        Ok(Matrix::hstack(self.field(), x.dim(), &cols).mul(xi.1.lift()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::Prime(3)
    }

    #[test]
    fn strict_group_algebra_tensor() {
        let gt = GradedTensor::strict(Algebra::cyclic_group(f3(), 2)).unwrap();
        let r = gt.regular();
        assert_eq!(gt.tensor(&r, &r).unwrap().dim(), 2);
        assert_eq!(gt.unit(), r);
        let a = gt.associator(&r, &r, &r).unwrap();
        assert!(a.is_identity());
    }

    #[test]
    fn graded_vector_spaces() {
        let k = Algebra::ground(f3());
        let w = vec![f3().one(); 8];
        let gt = GradedTensor::new(k, 2, w, vec![Vec::new(), Vec::new()]).unwrap();
        assert_eq!(gt.algebra().dim(), 2);
        let r = gt.regular();
        let rr = gt.tensor(&r, &r).unwrap();
        assert_eq!(rr.dim(), 4);
        // both degrees are doubled in R ⊙ R
        assert_eq!(rr.act(gt.idempotent(0)).rank(), 2);
        assert_eq!(rr.act(gt.idempotent(1)).rank(), 2);
    }

    #[test]
    fn incompatible_ideals_are_rejected() {
        let s = Algebra::truncated_polynomial(Field::Prime(2), 2);
        let x = Matrix::unit_vector(Field::Prime(2), 2, 1);
        let one = Field::Prime(2).one();
        assert!(matches!(
            GradedTensor::new(s.clone(), 2, vec![one.clone(); 8], vec![vec![x.clone()], Vec::new()]),
            Err(WattsError::Grading(_))
        ));
        // J_1 = (x) needs J_{1+1} = J_0 ⊆ J_1 + J_1, which holds
        assert!(GradedTensor::new(s, 2, vec![one; 8], vec![Vec::new(), vec![x]]).is_ok());
    }
}
