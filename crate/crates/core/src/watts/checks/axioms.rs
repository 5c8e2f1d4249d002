use std::collections::HashMap;

use crate::algmod::{hom_modules, intertwines, Module, ModuleMap};
use crate::exactla::Matrix;
use crate::report::{CoherenceReport, Witness};

use super::super::structure::{as_map, MonoidalStructure};
use super::super::WattsError;
use super::Sample;

/// Structure maps and hom bases over a sample, computed once.
struct Ctx<'c> {
    ct: &'c dyn MonoidalStructure,
    sample: &'c Sample,
    unit: Module,
    homs: HashMap<(usize, usize), Vec<ModuleMap>>,
    alpha: HashMap<(usize, usize, usize), Matrix>,
    lambda: Vec<Matrix>,
    rho: Vec<Matrix>,
}

fn malformed(what: String) -> WattsError {
    WattsError::MalformedTensor(what)
}

impl<'c> Ctx<'c> {
    fn new(ct: &'c dyn MonoidalStructure, sample: &'c Sample) -> Result<Self, WattsError> {
        let n = sample.len();
        let unit = ct.unit();
        let mut homs = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                homs.insert((i, j), hom_modules(&sample[i].1, &sample[j].1)?.maps());
            }
        }
        let mut lambda = Vec::with_capacity(n);
        let mut rho = Vec::with_capacity(n);
        for (name, x) in sample {
            let l = ct.left_unitor(x)?;
            let ix = ct.tensor(&unit, x)?;
            if l.shape() != (x.dim(), ix.dim()) || l.inverse().is_none() {
                return Err(malformed(format!("λ_{name} is not an isomorphism")));
            }
            let r = ct.right_unitor(x)?;
            let xi = ct.tensor(x, &unit)?;
            if r.shape() != (x.dim(), xi.dim()) || r.inverse().is_none() {
                return Err(malformed(format!("ρ_{name} is not an isomorphism")));
            }
            lambda.push(l);
            rho.push(r);
        }
        let mut alpha = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (&sample[i].1, &sample[j].1, &sample[k].1);
                    let a = ct.associator(x, y, z)?;
                    let src = ct.tensor(&ct.tensor(x, y)?, z)?;
                    let dst = ct.tensor(x, &ct.tensor(y, z)?)?;
                    if a.shape() != (dst.dim(), src.dim()) || a.inverse().is_none() {
                        return Err(malformed(format!(
                            "α_({}, {}, {}) is not an isomorphism",
                            sample[i].0, sample[j].0, sample[k].0
                        )));
                    }
                    alpha.insert((i, j, k), a);
                }
            }
        }
        Ok(Ctx { ct, sample, unit, homs, alpha, lambda, rho })
    }

    fn name(&self, i: usize) -> &str {
        &self.sample[i].0
    }

    fn obj(&self, i: usize) -> &Module {
        &self.sample[i].1
    }

    fn t(&self, x: &Module, y: &Module) -> Result<Module, WattsError> {
        self.ct.tensor(x, y)
    }

    fn alpha_map(&self, x: &Module, y: &Module, z: &Module) -> Result<ModuleMap, WattsError> {
        let src = self.t(&self.t(x, y)?, z)?;
        let dst = self.t(x, &self.t(y, z)?)?;
        Ok(as_map(&src, &dst, self.ct.associator(x, y, z)?))
    }
}

/// Pentagon, triangles, unitors, `End(I)`, interchange and naturality over
/// every tuple drawn from `sample`.
///
/// Returns [`WattsError::MalformedTensor`] if a structure component is not
/// an isomorphism of the right shape.
pub fn check_monoidal_axioms(ct: &dyn MonoidalStructure, sample: &Sample) -> Result<CoherenceReport, WattsError> {
    let cx = Ctx::new(ct, sample)?;
    let mut rep = CoherenceReport::new("monoidal axioms");
    rep.sample = sample.iter().map(|(n, _)| n.clone()).collect();
    components_linear(&cx, &mut rep)?;
    pentagon(&cx, &mut rep)?;
    triangles(&cx, &mut rep)?;
    end_unit(&cx, &mut rep)?;
    interchange(&cx, &mut rep)?;
    naturality(&cx, &mut rep)?;
    Ok(rep)
}

fn components_linear(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let n = cx.sample.len();
    for i in 0..n {
        let x = cx.obj(i);
        let ix = cx.t(&cx.unit, x)?;
        let xi = cx.t(x, &cx.unit)?;
        let ok = intertwines(&cx.lambda[i], ix.action(), x.action()) && intertwines(&cx.rho[i], xi.action(), x.action());
        rep.record("components_linear", witness(ok, &[cx.name(i)], "λ or ρ is not R-linear"));
    }
    for (&(i, j, k), a) in &cx.alpha {
        let (x, y, z) = (cx.obj(i), cx.obj(j), cx.obj(k));
        let src = cx.t(&cx.t(x, y)?, z)?;
        let dst = cx.t(x, &cx.t(y, z)?)?;
        let ok = intertwines(a, src.action(), dst.action());
        rep.record("components_linear", witness(ok, &[cx.name(i), cx.name(j), cx.name(k)], "α is not R-linear"));
    }
    Ok(())
}

fn pentagon(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let ct = cx.ct;
    let n = cx.sample.len();
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ow, ox, oy, oz) = (cx.obj(w), cx.obj(x), cx.obj(y), cx.obj(z));
                    let xy = cx.t(ox, oy)?;
                    let yz = cx.t(oy, oz)?;
                    let wx = cx.t(ow, ox)?;
                    let a_xyz = cx.alpha_map(ox, oy, oz)?;
                    let a_wxy = cx.alpha_map(ow, ox, oy)?;
                    let lhs = ct
                        .id_tensor(ow, &a_xyz)?
                        .mul(&ct.associator(ow, &xy, oz)?)
                        .mul(&ct.tensor_id(&a_wxy, oz)?);
                    let rhs = ct.associator(ow, ox, &yz)?.mul(&ct.associator(&wx, oy, oz)?);
                    rep.record_eq("pentagon", &[cx.name(w), cx.name(x), cx.name(y), cx.name(z)], &lhs, &rhs);
                }
            }
        }
    }
    Ok(())
}

fn triangles(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let ct = cx.ct;
    let n = cx.sample.len();
    let unit = &cx.unit;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (cx.obj(i), cx.obj(j));
            let names = [cx.name(i), cx.name(j)];
            let lam_y = as_map(&cx.t(unit, y)?, y, cx.lambda[j].clone());
            let rho_x = as_map(&cx.t(x, unit)?, x, cx.rho[i].clone());
            let lam_x = as_map(&cx.t(unit, x)?, x, cx.lambda[i].clone());
            let rho_y = as_map(&cx.t(y, unit)?, y, cx.rho[j].clone());

            let lhs = ct.id_tensor(x, &lam_y)?.mul(&ct.associator(x, unit, y)?);
            rep.record_eq("triangle", &names, &lhs, &ct.tensor_id(&rho_x, y)?);

            let xy = cx.t(x, y)?;
            let lhs = ct.left_unitor(&xy)?.mul(&ct.associator(unit, x, y)?);
            rep.record_eq("triangle_left", &names, &lhs, &ct.tensor_id(&lam_x, y)?);

            let lhs = ct.id_tensor(x, &rho_y)?.mul(&ct.associator(x, y, unit)?);
            rep.record_eq("triangle_right", &names, &lhs, &ct.right_unitor(&xy)?);
        }
    }
    rep.record_eq("unitors_agree", &["I"], &ct.left_unitor(unit)?, &ct.right_unitor(unit)?);
    Ok(())
}

fn end_unit(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let ct = cx.ct;
    let unit = &cx.unit;
    let ends = hom_modules(unit, unit)?.maps();
    for a in &ends {
        for b in &ends {
            rep.record_eq("end_unit_commutative", &["I"], &a.matrix().mul(b.matrix()), &b.matrix().mul(a.matrix()));
        }
    }
    let one = ModuleMap::identity(unit);
    let n = cx.sample.len();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (cx.obj(i), cx.obj(j));
            let names = [cx.name(i), cx.name(j)];
            let lam_x_inv = cx.lambda[i].inverse().expect("checked invertible");
            let rho_x_inv = cx.rho[i].inverse().expect("checked invertible");
            // r · f = λ_Y (r ⊙ f) λ_X^{-1} and f · r = ρ_Y (f ⊙ r) ρ_X^{-1}
            let left = |r: &ModuleMap, f: &ModuleMap| -> Result<Matrix, WattsError> {
                Ok(cx.lambda[j].mul(&ct.tensor_maps(r, f)?).mul(&lam_x_inv))
            };
            let right = |f: &ModuleMap, r: &ModuleMap| -> Result<Matrix, WattsError> {
                Ok(cx.rho[j].mul(&ct.tensor_maps(f, r)?).mul(&rho_x_inv))
            };
            for f in &cx.homs[&(i, j)] {
                rep.record_eq("end_unit_action", &names, &left(&one, f)?, f.matrix());
                rep.record_eq("end_unit_action", &names, &right(f, &one)?, f.matrix());
                for r in &ends {
                    for s in &ends {
                        let rf = as_map(x, y, left(r, f)?);
                        let fs = as_map(x, y, right(f, s)?);
                        rep.record_eq("end_unit_action", &names, &right(&rf, s)?, &left(r, &fs)?);
                    }
                }
            }
        }
    }
    Ok(())
}

fn interchange(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let ct = cx.ct;
    let n = cx.sample.len();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (cx.obj(i), cx.obj(j));
            let id = ct.tensor_maps(&ModuleMap::identity(x), &ModuleMap::identity(y))?;
            rep.record("tensor_identity", witness(id.is_identity(), &[cx.name(i), cx.name(j)], "id ⊙ id is not the identity"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let names = [cx.name(a), cx.name(b), cx.name(c), cx.name(d)];
                    for f in &cx.homs[&(a, b)] {
                        for g in &cx.homs[&(c, d)] {
                            let both = ct.tensor_maps(f, g)?;
                            let first = ct.tensor_id(f, cx.obj(d))?.mul(&ct.id_tensor(cx.obj(a), g)?);
                            let second = ct.id_tensor(cx.obj(b), g)?.mul(&ct.tensor_id(f, cx.obj(c))?);
                            rep.record_eq("interchange", &names, &both, &first);
                            rep.record_eq("interchange", &names, &both, &second);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn naturality(cx: &Ctx, rep: &mut CoherenceReport) -> Result<(), WattsError> {
    let ct = cx.ct;
    let unit = &cx.unit;
    let n = cx.sample.len();
    for a in 0..n {
        for b in 0..n {
            let (src, dst) = (cx.obj(a), cx.obj(b));
            for f in &cx.homs[&(a, b)] {
                let lhs = f.matrix().mul(&cx.lambda[a]);
                let rhs = cx.lambda[b].mul(&ct.id_tensor(unit, f)?);
                rep.record_eq("lambda_natural", &[cx.name(a), cx.name(b)], &lhs, &rhs);
                let lhs = f.matrix().mul(&cx.rho[a]);
                let rhs = cx.rho[b].mul(&ct.tensor_id(f, unit)?);
                rep.record_eq("rho_natural", &[cx.name(a), cx.name(b)], &lhs, &rhs);

                for p in 0..n {
                    for q in 0..n {
                        let (u, v) = (cx.obj(p), cx.obj(q));
                        let names = [cx.name(a), cx.name(b), cx.name(p), cx.name(q)];
                        let id_u = ModuleMap::identity(u);
                        let id_v = ModuleMap::identity(v);
                        let uv = cx.t(u, v)?;

                        // f in the first slot: (f, u, v)
                        let fu = ct.tensor_map(f, &id_u)?;
                        let lhs = ct.associator(dst, u, v)?.mul(&ct.tensor_id(&fu, v)?);
                        let rhs = ct.tensor_id(f, &uv)?.mul(&ct.associator(src, u, v)?);
                        rep.record_eq("alpha_natural", &names, &lhs, &rhs);

                        // middle slot: (u, f, v)
                        let uf = ct.tensor_map(&id_u, f)?;
                        let fv = ct.tensor_map(f, &id_v)?;
                        let lhs = ct.associator(u, dst, v)?.mul(&ct.tensor_id(&uf, v)?);
                        let rhs = ct.id_tensor(u, &fv)?.mul(&ct.associator(u, src, v)?);
                        rep.record_eq("alpha_natural", &names, &lhs, &rhs);

                        // last slot: (u, v, f)
                        let vf = ct.tensor_map(&id_v, f)?;
                        let lhs = ct.associator(u, v, dst)?.mul(&ct.id_tensor(&uv, f)?);
                        let rhs = ct.id_tensor(u, &vf)?.mul(&ct.associator(u, v, src)?);
                        rep.record_eq("alpha_natural", &names, &lhs, &rhs);
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn witness(ok: bool, objects: &[&str], detail: &str) -> Result<(), Witness> {
    if ok {
        Ok(())
    } else {
        Err(Witness::new(objects, detail))
    }
}
