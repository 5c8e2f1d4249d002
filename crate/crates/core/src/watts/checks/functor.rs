use crate::algmod::{bimodule_associator, bimodule_tensor, hom_modules, left_unit_iso, right_unit_iso, Bimodule};
use crate::exactla::Matrix;
use crate::report::CoherenceReport;

use super::super::engine::Transported;
use super::super::structure::{as_map, MonoidalStructure};
use super::super::WattsError;
use super::axioms::witness;
use super::Sample;

fn is_bimodule_map(f: &Matrix, src: &Bimodule, dst: &Bimodule) -> bool {
    src.is_hom(dst, f)
}

/// Checks that `ω` with `ξ` and `η` is a monoidal functor from the
/// transported structure to bimodules under `⊗_R`.
///
/// `negate_xi` replaces `ξ` on one named pair by its negative; a correct
/// checker must then fail.
pub fn verify_monoidal_functor(
    tr: &Transported,
    sample: &Sample,
    negate_xi: Option<(&str, &str)>,
) -> Result<CoherenceReport, WattsError> {
    let w = tr.watts();
    let field = w.field();
    let mut rep = CoherenceReport::new("monoidal functor ω");
    rep.sample = sample.iter().map(|(n, _)| n.clone()).collect();
    let unit = tr.unit();
    let regular = Bimodule::regular(w.algebra());

    let xi = |xn: &str, x: &crate::algmod::Module, yn: &str, y: &crate::algmod::Module| -> Result<Matrix, WattsError> {
        let m = tr.xi(x, y)?;
        Ok(if negate_xi == Some((xn, yn)) { m.neg() } else { m })
    };

    let eta = tr.eta()?;
    let omega_i = w.omega(&unit)?;
    rep.record("eta_bimodule", witness(is_bimodule_map(&eta, &regular, &omega_i.bimodule), &["I"], "η is not a bimodule map"));
    rep.record("eta_invertible", witness(eta.inverse().is_some(), &["I"], "η is not invertible"));

    for (xn, x) in sample {
        let ox = w.omega(x)?;
        rep.record(
            "omega_identity",
            witness(w.omega_map(&crate::algmod::ModuleMap::identity(x))?.is_identity(), &[xn], "ω(id) is not the identity"),
        );
        for (yn, y) in sample {
            let oy = w.omega(y)?;
            for f in hom_modules(x, y)?.maps() {
                let of = w.omega_map(&f)?;
                rep.record(
                    "omega_bimodule_maps",
                    witness(is_bimodule_map(&of, &ox.bimodule, &oy.bimodule), &[xn, yn], "ω(f) is not a bimodule map"),
                );
            }
            let m = xi(xn, x, yn, y)?;
            let (src, _) = bimodule_tensor(&ox.bimodule, &oy.bimodule)?;
            let xy = tr.tensor(x, y)?;
            let dst = &w.omega(&xy)?.bimodule;
            rep.record("xi_invertible", witness(m.inverse().is_some(), &[xn, yn], "ξ is not invertible"));
            rep.record("xi_bimodule", witness(is_bimodule_map(&m, &src, dst), &[xn, yn], "ξ is not a bimodule map"));
        }

        // ω(λ'_X) ∘ ξ_{I,X} ∘ (η ⊗ id) = canonical R ⊗ ω(X) → ω(X)
        let (tp_r, canon) = left_unit_iso(&ox.bimodule)?;
        let (_, tp_ix) = bimodule_tensor(&omega_i.bimodule, &ox.bimodule)?;
        let first = tp_r.map_to(&tp_ix, &eta, &Matrix::identity(field, ox.bimodule.dim()));
        let ix = tr.tensor(&unit, x)?;
        let lam = w.omega_map(&as_map(&ix, x, tr.left_unitor(x)?))?;
        let lhs = lam.mul(&xi("I", &unit, xn, x)?).mul(&first);
        rep.record_eq("unit_left", &[xn], &lhs, &canon);

        let (tp_r, canon) = right_unit_iso(&ox.bimodule)?;
        let (_, tp_xi) = bimodule_tensor(&ox.bimodule, &omega_i.bimodule)?;
        let first = tp_r.map_to(&tp_xi, &Matrix::identity(field, ox.bimodule.dim()), &eta);
        let xi_obj = tr.tensor(x, &unit)?;
        let rho = w.omega_map(&as_map(&xi_obj, x, tr.right_unitor(x)?))?;
        let lhs = rho.mul(&xi(xn, x, "I", &unit)?).mul(&first);
        rep.record_eq("unit_right", &[xn], &lhs, &canon);
    }

    for (xn, x) in sample {
        for (yn, y) in sample {
            for (zn, z) in sample {
                let (ox, oy, oz) = (w.omega(x)?, w.omega(y)?, w.omega(z)?);
                let xy = tr.tensor(x, y)?;
                let yz = tr.tensor(y, z)?;
                let (oxy, _) = bimodule_tensor(&ox.bimodule, &oy.bimodule)?;
                let (_, tp_xy_z) = bimodule_tensor(&oxy, &oz.bimodule)?;
                let (_, tp_mid) = bimodule_tensor(&w.omega(&xy)?.bimodule, &oz.bimodule)?;
                let step1 = tp_xy_z.map_to(&tp_mid, &xi(xn, x, yn, y)?, &Matrix::identity(field, oz.bimodule.dim()));
                let step2 = xi("", &xy, zn, z)?;
                let xy_z = tr.tensor(&xy, z)?;
                let x_yz = tr.tensor(x, &yz)?;
                let step3 = w.omega_map(&as_map(&xy_z, &x_yz, tr.associator(x, y, z)?))?;
                let lhs = step3.mul(&step2).mul(&step1);

                let a = bimodule_associator(&ox.bimodule, &oy.bimodule, &oz.bimodule)?;
                let (oyz, _) = bimodule_tensor(&oy.bimodule, &oz.bimodule)?;
                let (_, tp_x_yz) = bimodule_tensor(&ox.bimodule, &oyz)?;
                let (_, tp_x_oyz) = bimodule_tensor(&ox.bimodule, &w.omega(&yz)?.bimodule)?;
                let mid = tp_x_yz.map_to(&tp_x_oyz, &Matrix::identity(field, ox.bimodule.dim()), &xi(yn, y, zn, z)?);
                let rhs = xi(xn, x, "", &yz)?.mul(&mid).mul(&a);
                rep.record_eq("hexagon", &[xn, yn, zn], &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}
