use crate::algmod::{hom_modules, intertwines};
use crate::report::CoherenceReport;

use super::super::engine::Watts;
use super::super::structure::{as_map, invert, MonoidalStructure};
use super::super::WattsError;
use super::axioms::witness;
use super::RigidityData;

/// Both snake identities for each claimed duality, and, given the
/// reconstruction, `dim ω(X*) = dim Hom_R(ω(X), R)`.
pub fn check_rigidity(ct: &dyn MonoidalStructure, watts: Option<&Watts>, data: &[RigidityData]) -> Result<CoherenceReport, WattsError> {
    let mut rep = CoherenceReport::new("rigidity");
    let unit = ct.unit();
    for d in data {
        let (x, xd) = (&d.x, &d.dual);
        let names = [d.object.as_str()];
        let dx = ct.tensor(xd, x)?;
        let xdx = ct.tensor(x, xd)?;
        if d.ev.shape() != (unit.dim(), dx.dim()) || d.db.shape() != (xdx.dim(), unit.dim()) {
            return Err(WattsError::MalformedTensor(format!("ev or db for {} has the wrong shape", d.object)));
        }
        let linear = intertwines(&d.ev, dx.action(), unit.action()) && intertwines(&d.db, unit.action(), xdx.action());
        rep.record("ev_db_linear", witness(linear, &names, "ev or db is not R-linear"));
        let ev = as_map(&dx, &unit, d.ev.clone());
        let db = as_map(&unit, &xdx, d.db.clone());

        // X → I X → (X X*) X → X (X* X) → X I → X
        let snake = ct
            .right_unitor(x)?
            .mul(&ct.id_tensor(x, &ev)?)
            .mul(&ct.associator(x, xd, x)?)
            .mul(&ct.tensor_id(&db, x)?)
            .mul(&invert(&ct.left_unitor(x)?, "λ", &names)?);
        rep.record("snake_left", witness(snake.is_identity(), &names, "ρ (id ⊙ ev) α (db ⊙ id) λ^{-1} ≠ id"));

        // X* → X* I → X* (X X*) → (X* X) X* → I X* → X*
        let snake = ct
            .left_unitor(xd)?
            .mul(&ct.tensor_id(&ev, xd)?)
            .mul(&invert(&ct.associator(xd, x, xd)?, "α", &names)?)
            .mul(&ct.id_tensor(xd, &db)?)
            .mul(&invert(&ct.right_unitor(xd)?, "ρ", &names)?);
        rep.record("snake_right", witness(snake.is_identity(), &names, "λ (ev ⊙ id) α^{-1} (id ⊙ db) ρ^{-1} ≠ id"));

        if let Some(w) = watts {
            let ox = w.omega(x)?.bimodule.as_right_module();
            let dual_dim = hom_modules(&ox, w.regular())?.dim();
            let od = w.omega(xd)?.bimodule.dim();
            let detail = format!("dim ω(X*) = {od} but dim Hom_R(ω(X), R) = {dual_dim}");
            rep.record("dual_rank", if od == dual_dim { Ok(()) } else { Err(crate::report::Witness::new(&names, detail)) });
        }
    }
    Ok(rep)
}
