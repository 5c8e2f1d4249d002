use std::sync::Arc;

use crate::algmod::{bimodule_tensor, left_unit_matrix, AlgModError, Algebra, Bimodule, Module, ModuleMap, Side, TensorProduct};
use crate::exactla::{Field, Matrix};

use super::memo::Memo;
use super::structure::{as_map, invert, left_multiplication_map, MonoidalStructure};
use super::WattsError;

/// `T = R ⊙ R` with its three commuting actions: `left1(r) = l_r ⊙ id`,
/// `left2(r) = id ⊙ l_r` and the right action of the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleModule {
    pub dim: usize,
    pub left1: Vec<Matrix>,
    pub left2: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl TripleModule {
    /// `T` as a bimodule through `left1` and the right action.
    pub fn bimodule(&self, algebra: &Arc<Algebra>) -> Result<Bimodule, WattsError> {
        Ok(Bimodule::new(algebra.clone(), self.dim, self.left1.clone(), self.right.clone())?)
    }
}

/// `ω(X) = X ⊗_R T`, tensoring over the `left2` action; the outer actions
/// are `left1` and the right action of `T`.
#[derive(Clone, Debug)]
pub struct Omega {
    pub bimodule: Bimodule,
    pub presentation: TensorProduct,
}

/// The reconstruction data of a monoidal structure.
pub struct Watts<'a> {
    ct: &'a dyn MonoidalStructure,
    regular: Module,
    t: TripleModule,
    r_tensor: Memo<Module, (Module, Vec<Matrix>)>,
    omega: Memo<Module, Omega>,
    theta: Memo<(Module, Module), (TensorProduct, Matrix)>,
    nu: Memo<Module, Matrix>,
    transported: Memo<(Module, Module), (Module, TensorProduct)>,
    c: Memo<(Module, Module), Matrix>,
}

fn action_law_holds(alg: &Algebra, acts: &[Matrix], left: bool) -> Option<String> {
    let f = alg.field();
    let n = acts.first().map(|m| m.rows()).unwrap_or(0);
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let prod = combine(f, n, &alg.basis_product(i, j), acts);
            let want = if left { acts[i].mul(&acts[j]) } else { acts[j].mul(&acts[i]) };
            if prod != want {
                return Some(format!("e_{i} e_{j}"));
            }
        }
    }
    if !combine(f, n, alg.unit(), acts).is_identity() {
        return Some("unit".into());
    }
    None
}

fn combine(field: Field, n: usize, coeffs: &Matrix, mats: &[Matrix]) -> Matrix {
    crate::algmod::combine(field, n, coeffs, mats)
}

/// `ŷ_j: R → Y, r ↦ y_j r`.
pub(crate) fn hat_map(y: &Module, j: usize) -> ModuleMap {
    let cols: Vec<Matrix> = y.action().iter().map(|a| a.col(j)).collect();
    let m = Matrix::hstack(y.field(), y.dim(), &cols);
    let r = Module::regular_right(y.algebra());
    ModuleMap::new_unchecked(r, y.clone(), m)
}

impl<'a> Watts<'a> {
    /// Builds `T = R ⊙ R` and checks that its three actions commute.
    pub fn new(ct: &'a dyn MonoidalStructure) -> Result<Self, WattsError> {
        let alg = ct.algebra().clone();
        let regular = ct.regular();
        let rr = ct.tensor(&regular, &regular)?;
        let mut left1 = Vec::with_capacity(alg.dim());
        let mut left2 = Vec::with_capacity(alg.dim());
        for i in 0..alg.dim() {
            let l = left_multiplication_map(&alg, i);
            left1.push(ct.tensor_id(&l, &regular)?);
            left2.push(ct.id_tensor(&regular, &l)?);
        }
        let right = rr.action().to_vec();
        let clash = |m: String| Err(WattsError::ActionClash(m));
        if let Some(w) = action_law_holds(&alg, &left1, true) {
            return clash(format!("l_r ⊙ id is not a left action ({w})"));
        }
        if let Some(w) = action_law_holds(&alg, &left2, true) {
            return clash(format!("id ⊙ l_r is not a left action ({w})"));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if left1[i].mul(&left2[j]) != left2[j].mul(&left1[i]) {
                    return clash(format!("l_{i} ⊙ id and id ⊙ l_{j}"));
                }
                if left1[i].mul(&right[j]) != right[j].mul(&left1[i]) {
                    return clash(format!("l_{i} ⊙ id and the right action of e_{j}"));
                }
                if left2[i].mul(&right[j]) != right[j].mul(&left2[i]) {
                    return clash(format!("id ⊙ l_{i} and the right action of e_{j}"));
                }
            }
        }
        let t = TripleModule { dim: rr.dim(), left1, left2, right };
        Ok(Watts {
            ct,
            regular,
            t,
            r_tensor: Memo::new(),
            omega: Memo::new(),
            theta: Memo::new(),
            nu: Memo::new(),
            transported: Memo::new(),
            c: Memo::new(),
        })
    }

    pub fn structure(&self) -> &'a dyn MonoidalStructure {
        self.ct
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.ct.algebra()
    }

    pub fn field(&self) -> Field {
        self.algebra().field()
    }

    pub fn regular(&self) -> &Module {
        &self.regular
    }

    pub fn t(&self) -> &TripleModule {
        &self.t
    }

    /// `R ⊙ X` with the left action `l_r ⊙ id_X`.
    pub fn r_tensor(&self, x: &Module) -> Result<Arc<(Module, Vec<Matrix>)>, WattsError> {
        self.r_tensor.get_or_try(x, || {
            let rx = self.ct.tensor(&self.regular, x)?;
            let alg = self.algebra();
            let left = (0..alg.dim())
                .map(|i| self.ct.tensor_id(&left_multiplication_map(alg, i), x))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((rx, left))
        })
    }

    /// `θ_X(Y): Y ⊗_R (R ⊙ X) → Y ⊙ X`, `y ⊗ t ↦ (ŷ ⊙ id_X)(t)`, with the presentation of its source.
    pub fn theta(&self, x: &Module, y: &Module) -> Result<Arc<(TensorProduct, Matrix)>, WattsError> {
        self.theta.get_or_try(&(x.clone(), y.clone()), || {
            let rx = self.r_tensor(x)?;
            let tp = TensorProduct::from_actions(self.field(), y.action(), &rx.1, y.dim(), rx.0.dim());
            let yx = self.ct.tensor(y, x)?;
            let id = ModuleMap::identity(x);
            let blocks = (0..y.dim())
                .map(|j| self.ct.tensor_maps(&hat_map(y, j), &id))
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::hstack(self.field(), yx.dim(), &blocks).mul(tp.lift());
            if m.inverse().is_none() {
                return Err(WattsError::NotInvertible { map: "θ".into(), objects: format!("dim X = {}, dim Y = {}", x.dim(), y.dim()) });
            }
            Ok((tp, m))
        })
    }

    pub fn omega(&self, x: &Module) -> Result<Arc<Omega>, WattsError> {
        self.omega.get_or_try(x, || {
            if x.side() != Side::Right {
                return Err(AlgModError::SideMismatch.into());
            }
            let tp = TensorProduct::from_actions(self.field(), x.action(), &self.t.left2, x.dim(), self.t.dim);
            let left = self.t.left1.iter().map(|m| tp.induce_right(m)).collect();
            let right = self.t.right.iter().map(|m| tp.induce_right(m)).collect();
            let bimodule = Bimodule::new(self.algebra().clone(), tp.dim(), left, right)
                .map_err(|e| WattsError::ActionClash(format!("ω is not a bimodule: {e}")))?;
            Ok(Omega { bimodule, presentation: tp })
        })
    }

    /// `ω(f) = f ⊗ id_T`.
    pub fn omega_map(&self, f: &ModuleMap) -> Result<Matrix, WattsError> {
        let s = self.omega(f.source())?;
        let t = self.omega(f.target())?;
        let it = Matrix::identity(self.field(), self.t.dim);
        Ok(s.presentation.map_to(&t.presentation, f.matrix(), &it))
    }

    /// `ν_X: X ⊗_R T → R ⊙ X`, `x ⊗ t ↦ (id_R ⊙ x̂)(t)`.
    pub fn nu(&self, x: &Module) -> Result<Arc<Matrix>, WattsError> {
        self.nu.get_or_try(x, || {
            let om = self.omega(x)?;
            let rx = self.ct.tensor(&self.regular, x)?;
            let id = ModuleMap::identity(&self.regular);
            let blocks = (0..x.dim())
                .map(|j| self.ct.tensor_maps(&id, &hat_map(x, j)))
                .collect::<Result<Vec<_>, _>>()?;
            let m = Matrix::hstack(self.field(), rx.dim(), &blocks).mul(om.presentation.lift());
            if m.inverse().is_none() {
                return Err(WattsError::NotInvertible { map: "ν".into(), objects: format!("dim X = {}", x.dim()) });
            }
            Ok(m)
        })
    }

    /// `μ_X = ν_X^{-1}: R ⊙ X → X ⊗_R T`.
    pub fn mu(&self, x: &Module) -> Result<Matrix, WattsError> {
        invert(&*self.nu(x)?, "ν", &[])
    }

    /// `X ⊙' Y = X ⊗_R ω(Y)` with its presentation.
    pub fn transported_product(&self, x: &Module, y: &Module) -> Result<Arc<(Module, TensorProduct)>, WattsError> {
        self.transported.get_or_try(&(x.clone(), y.clone()), || {
            if x.side() != Side::Right {
                return Err(AlgModError::SideMismatch.into());
            }
            let om = self.omega(y)?;
            let b = &om.bimodule;
            let tp = TensorProduct::from_actions(self.field(), x.action(), b.left(), x.dim(), b.dim());
            let right = b.right().iter().map(|m| tp.induce_right(m)).collect();
            let m = Module::new(self.algebra().clone(), Side::Right, tp.dim(), right)?;
            Ok((m, tp))
        })
    }

    /// `c_{X,Y} = θ_Y(X) ∘ (id_X ⊗ ν_Y): X ⊗_R ω(Y) → X ⊙ Y`.
    pub fn c(&self, x: &Module, y: &Module) -> Result<Arc<Matrix>, WattsError> {
        self.c.get_or_try(&(x.clone(), y.clone()), || {
            let th = self.theta(y, x)?;
            let nu = self.nu(y)?;
            let src = self.transported_product(x, y)?;
            let ix = Matrix::identity(self.field(), x.dim());
            let m = th.1.mul(&src.1.map_to(&th.0, &ix, &nu));
            if m.inverse().is_none() {
                return Err(WattsError::NotInvertible { map: "c".into(), objects: format!("dim X = {}, dim Y = {}", x.dim(), y.dim()) });
            }
            Ok(m)
        })
    }

    /// `u_X: R ⊗_R ω(X) → ω(X)`, the left unit isomorphism of `⊗_R`.
    pub fn u(&self, x: &Module) -> Result<Matrix, WattsError> {
        let om = self.omega(x)?;
        let tp = self.transported_product(&self.regular, x)?;
        let b = &om.bimodule;
        Ok(left_unit_matrix(self.algebra(), &tp.1, b.left(), b.dim()))
    }

    pub fn transported(&self) -> Transported<'_, 'a> {
        Transported { w: self }
    }
}

/// The structure `X ⊙' Y = X ⊗_R ω(Y)` carried over from `⊙` along `c`.
pub struct Transported<'w, 'a> {
    w: &'w Watts<'a>,
}

impl<'w, 'a> Transported<'w, 'a> {
    pub fn watts(&self) -> &'w Watts<'a> {
        self.w
    }

    /// `c_{X,Y}` as a map `X ⊙' Y → X ⊙ Y`.
    fn c_map(&self, x: &Module, y: &Module) -> Result<ModuleMap, WattsError> {
        let src = self.w.transported_product(x, y)?.0.clone();
        let dst = self.w.ct.tensor(x, y)?;
        Ok(as_map(&src, &dst, (*self.w.c(x, y)?).clone()))
    }

    /// `ξ_{X,Y} = u_{X⊙'Y} ∘ α'_{R,X,Y} ∘ (u_X^{-1} ⊗ id): ω(X) ⊗_R ω(Y) → ω(X ⊙' Y)`.
    pub fn xi(&self, x: &Module, y: &Module) -> Result<Matrix, WattsError> {
        let w = self.w;
        let r = w.regular();
        let (ox, oy) = (w.omega(x)?, w.omega(y)?);
        let (_, tp) = bimodule_tensor(&ox.bimodule, &oy.bimodule)?;
        let rx = w.transported_product(r, x)?;
        let rx_y = w.transported_product(&rx.0, y)?;
        let ux_inv = invert(&w.u(x)?, "u", &["X"])?;
        let first = tp.map_to(&rx_y.1, &ux_inv, &Matrix::identity(w.field(), oy.bimodule.dim()));
        let alpha = self.associator(r, x, y)?;
        let xy = w.transported_product(x, y)?.0.clone();
        Ok(w.u(&xy)?.mul(&alpha).mul(&first))
    }

    /// `η = μ_I ∘ ρ_R^{-1}: R → ω(I)`.
    pub fn eta(&self) -> Result<Matrix, WattsError> {
        let w = self.w;
        let rho = w.ct.right_unitor(w.regular())?;
        let rho_inv = invert(&rho, "ρ", &["R"])?;
        Ok(w.mu(&w.ct.unit())?.mul(&rho_inv))
    }
}

impl MonoidalStructure for Transported<'_, '_> {
    fn algebra(&self) -> &Arc<Algebra> {
        self.w.algebra()
    }

    fn unit(&self) -> Module {
        self.w.ct.unit()
    }

    fn tensor(&self, x: &Module, y: &Module) -> Result<Module, WattsError> {
        Ok(self.w.transported_product(x, y)?.0.clone())
    }

    fn tensor_maps(&self, f: &ModuleMap, g: &ModuleMap) -> Result<Matrix, WattsError> {
        let s = self.w.transported_product(f.source(), g.source())?;
        let t = self.w.transported_product(f.target(), g.target())?;
        let og = self.w.omega_map(g)?;
        Ok(s.1.map_to(&t.1, f.matrix(), &og))
    }

    fn associator(&self, x: &Module, y: &Module, z: &Module) -> Result<Matrix, WattsError> {
        let ct = self.w.ct;
        let c_xy = self.c_map(x, y)?;
        let c_yz = self.c_map(y, z)?;
        let xy = c_xy.target().clone();
        let yz = c_yz.target().clone();
        let a1 = self.tensor_id(&c_xy, z)?;
        let a2 = self.w.c(&xy, z)?;
        let a3 = ct.associator(x, y, z)?;
        let a4 = invert(&*self.w.c(x, &yz)?, "c", &["X", "Y⊙Z"])?;
        let a5 = invert(&self.id_tensor(x, &c_yz)?, "id ⊙' c", &["X", "Y", "Z"])?;
        Ok(a5.mul(&a4).mul(&a3).mul(&a2).mul(&a1))
    }

    fn left_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        let i = self.unit();
        Ok(self.w.ct.left_unitor(x)?.mul(&*self.w.c(&i, x)?))
    }

    fn right_unitor(&self, x: &Module) -> Result<Matrix, WattsError> {
        let i = self.unit();
        Ok(self.w.ct.right_unitor(x)?.mul(&*self.w.c(x, &i)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::watts::GradedTensor;

    #[test]
    fn strict_t_is_regular() {
        let gt = GradedTensor::strict(Algebra::cyclic_group(Field::Prime(3), 2)).unwrap();
        let w = Watts::new(&gt).unwrap();
        assert_eq!(w.t().dim, 2);
        assert_eq!(w.t().left1, w.t().left2);
    }

    #[test]
    fn graded_t_has_dimension_four() {
        let f = Field::Prime(3);
        let gt = GradedTensor::new(Algebra::ground(f), 2, vec![f.one(); 8], vec![Vec::new(), Vec::new()]).unwrap();
        let w = Watts::new(&gt).unwrap();
        assert_eq!(w.t().dim, 4);
        let r = w.regular().clone();
        assert_eq!(w.omega(&r).unwrap().bimodule.dim(), 4);
        assert_eq!(w.transported().tensor(&r, &r).unwrap().dim(), 4);
    }
}
