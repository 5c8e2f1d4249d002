use serde_json::json;

use crate::algmod::{hom_modules, intertwines, ModuleMap};
use crate::exactla::Matrix;
use crate::report::CoherenceReport;

use super::super::engine::{hat_map, Watts};
use super::super::structure::{as_map, left_multiplication_map, MonoidalStructure};
use super::super::WattsError;
use super::axioms::witness;
use super::Sample;

/// Coherence of the reconstruction data: the transported associator on
/// `(R, R, R, R)`, the transported unit triangle on `(R, I, R)`, the
/// equivariance of `α'_{R,R,R}`, and naturality of `θ`, `ν` and `c` over
/// `sample`.
pub fn check_t_coherence(w: &Watts, sample: &Sample) -> Result<CoherenceReport, WattsError> {
    let tr = w.transported();
    let alg = w.algebra().clone();
    let field = w.field();
    let r = w.regular().clone();
    let unit = tr.unit();
    let mut rep = CoherenceReport::new("reconstruction data");
    rep.sample = sample.iter().map(|(n, _)| n.clone()).collect();

    let t = w.t();
    rep.record("t_actions", Ok(()));
    rep.set_data("t_dim", json!(t.dim));
    rep.set_data("t_left_actions_agree", json!(t.left1 == t.left2));

    // pentagon for ⊙' at (R, R, R, R)
    let rr = tr.tensor(&r, &r)?;
    let a_rrr = tr.associator(&r, &r, &r)?;
    let a_map = as_map(&tr.tensor(&rr, &r)?, &tr.tensor(&r, &rr)?, a_rrr.clone());
    let lhs = tr
        .id_tensor(&r, &a_map)?
        .mul(&tr.associator(&r, &rr, &r)?)
        .mul(&tr.tensor_id(&a_map, &r)?);
    let rhs = tr.associator(&r, &r, &rr)?.mul(&tr.associator(&rr, &r, &r)?);
    rep.record_eq("t_pentagon", &["R", "R", "R", "R"], &lhs, &rhs);
    rep.set_data("alpha_prime_rrr_is_identity", json!(a_rrr.is_identity()));
    rep.set_data("alpha_prime_rrr", a_rrr.to_json());

    // (id ⊙' λ'_R) ∘ α'_{R,I,R} = ρ'_R ⊙' id_R
    let lam = as_map(&tr.tensor(&unit, &r)?, &r, tr.left_unitor(&r)?);
    let rho = as_map(&tr.tensor(&r, &unit)?, &r, tr.right_unitor(&r)?);
    let lhs = tr.id_tensor(&r, &lam)?.mul(&tr.associator(&r, &unit, &r)?);
    rep.record_eq("t_unit", &["R", "I", "R"], &lhs, &tr.tensor_id(&rho, &r)?);

    // α'_{R,R,R} commutes with l_r in each slot and with the right action
    let src = tr.tensor(&rr, &r)?;
    let dst = tr.tensor(&r, &rr)?;
    let id = ModuleMap::identity(&r);
    for i in 0..alg.dim() {
        let l = left_multiplication_map(&alg, i);
        let slot1 = (tr.tensor_id(&tr.tensor_map(&l, &id)?, &r)?, tr.tensor_id(&l, &rr)?);
        let slot2 = (tr.tensor_id(&tr.tensor_map(&id, &l)?, &r)?, tr.id_tensor(&r, &tr.tensor_map(&l, &id)?)?);
        let slot3 = (tr.id_tensor(&rr, &l)?, tr.id_tensor(&r, &tr.tensor_map(&id, &l)?)?);
        for (k, (before, after)) in [slot1, slot2, slot3].into_iter().enumerate() {
            let slot = format!("slot {}", k + 1);
            rep.record_eq("t_equivariance", &[&format!("e_{i}"), &slot], &a_rrr.mul(&before), &after.mul(&a_rrr));
        }
    }
    rep.record(
        "t_equivariance",
        witness(intertwines(&a_rrr, src.action(), dst.action()), &["right action"], "α'_{R,R,R} is not right R-linear"),
    );

    // naturality of θ, ν and c over the sample
    for (xn, x) in sample {
        for (yn, y) in sample {
            let th = w.theta(x, y)?;
            let rx = w.r_tensor(x)?;
            for (yn2, y2) in sample {
                let th2 = w.theta(x, y2)?;
                for f in hom_modules(y, y2)?.maps() {
                    let lhs = w.structure().tensor_id(&f, x)?.mul(&th.1);
                    let rhs = th2.1.mul(&th.0.map_to(&th2.0, f.matrix(), &Matrix::identity(field, rx.0.dim())));
                    rep.record_eq("theta_natural", &[xn, yn, yn2], &lhs, &rhs);
                }
            }
            for (xn2, x2) in sample {
                let th2 = w.theta(x2, y)?;
                for g in hom_modules(x, x2)?.maps() {
                    let rg = w.structure().id_tensor(&r, &g)?;
                    let lhs = w.structure().id_tensor(y, &g)?.mul(&th.1);
                    let rhs = th2.1.mul(&th.0.map_to(&th2.0, &Matrix::identity(field, y.dim()), &rg));
                    rep.record_eq("theta_natural", &[xn, xn2, yn], &lhs, &rhs);

                    let c1 = w.c(x, y)?;
                    let c2 = w.c(x2, y)?;
                    let lhs = c2.mul(&tr.tensor_id(&g, y)?);
                    let rhs = w.structure().tensor_id(&g, y)?.mul(&c1);
                    rep.record_eq("c_natural", &[xn, xn2, yn], &lhs, &rhs);
                    let c3 = w.c(y, x2)?;
                    let c4 = w.c(y, x)?;
                    let lhs = c3.mul(&tr.id_tensor(y, &g)?);
                    let rhs = w.structure().id_tensor(y, &g)?.mul(&c4);
                    rep.record_eq("c_natural", &[yn, xn, xn2], &lhs, &rhs);
                }
            }
        }
        for (xn2, x2) in sample {
            for f in hom_modules(x, x2)?.maps() {
                let lhs = w.structure().id_tensor(&r, &f)?.mul(&*w.nu(x)?);
                let rhs = w.nu(x2)?.mul(&w.omega_map(&f)?);
                rep.record_eq("nu_natural", &[xn, xn2], &lhs, &rhs);
            }
        }
        // ŷ is a map of right modules for each basis vector
        for j in 0..x.dim() {
            let h = hat_map(x, j);
            let ok = intertwines(h.matrix(), r.action(), x.action());
            rep.record("hat_linear", witness(ok, &[xn], "x̂ is not R-linear"));
        }
    }
    Ok(rep)
}
