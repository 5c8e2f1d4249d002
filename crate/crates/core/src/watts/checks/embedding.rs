use serde_json::json;

use crate::algmod::hom_modules;
use crate::exactla::Matrix;
use crate::report::{CoherenceReport, Witness};

use super::super::engine::Watts;
use super::super::WattsError;
use super::axioms::witness;
use super::{Sample, Sequence};

/// Exactness data of `A --f--> B --g--> C`.
struct Exactness {
    composite_zero: bool,
    onto: bool,
    middle: bool,
    injective: bool,
}

fn exactness(f: &Matrix, g: &Matrix, dim_a: usize, dim_c: usize) -> Exactness {
    let rank_g = g.rank();
    let rank_f = f.rank();
    let dim_b = g.cols();
    Exactness {
        composite_zero: g.mul(f).is_zero(),
        onto: rank_g == dim_c,
        middle: dim_b - rank_g == rank_f,
        injective: rank_f == dim_a,
    }
}

/// Embedding properties of `ω`: nonzero on nonzero objects, injective on
/// hom spaces, right exact on the supplied sequences, and a left-exactness
/// probe on the short exact ones.
pub fn verify_embedding(w: &Watts, sample: &Sample, sequences: &[Sequence]) -> Result<CoherenceReport, WattsError> {
    let mut rep = CoherenceReport::new("embedding ω");
    rep.sample = sample.iter().map(|(n, _)| n.clone()).collect();
    let field = w.field();

    for (xn, x) in sample {
        let dim = w.omega(x)?.bimodule.dim();
        let ok = x.is_zero() == (dim == 0);
        rep.record("nonzero", witness(ok, &[xn], "ω(X) vanishes on a nonzero object"));
        for (yn, y) in sample {
            let hom = hom_modules(x, y)?;
            let images = hom.maps().iter().map(|f| Ok(w.omega_map(f)?.vectorize())).collect::<Result<Vec<_>, WattsError>>()?;
            let rows = images.first().map(|m| m.rows()).unwrap_or(0);
            let rank = Matrix::hstack(field, rows, &images).rank();
            let ok = rank == hom.dim();
            let detail = format!("rank {rank} of ω on a hom space of dimension {}", hom.dim());
            rep.record("faithful", if ok { Ok(()) } else { Err(Witness::new(&[xn, yn], detail)) });
        }
    }

    let mut flat_failures = Vec::new();
    rep.declare("left_exact", crate::report::CheckKind::Probe);
    for s in sequences {
        let (a, c) = (s.f.source(), s.g.target());
        let input = exactness(s.f.matrix(), s.g.matrix(), a.dim(), c.dim());
        let input_ok = input.composite_zero && input.onto && input.middle && (!s.short_exact || input.injective);
        rep.record("input_exact", witness(input_ok, &[&s.name], "the supplied sequence is not exact"));

        let of = w.omega_map(&s.f)?;
        let og = w.omega_map(&s.g)?;
        let oa = w.omega(a)?.bimodule.dim();
        let oc = w.omega(c)?.bimodule.dim();
        let image = exactness(&of, &og, oa, oc);
        let detail = format!(
            "g∘f = 0: {}, onto: {}, exact in the middle: {}",
            image.composite_zero, image.onto, image.middle
        );
        let ok = image.composite_zero && image.onto && image.middle;
        rep.record("right_exact", if ok { Ok(()) } else { Err(Witness::new(&[&s.name], detail)) });
        if s.short_exact {
            if !image.injective {
                flat_failures.push(s.name.clone());
            }
            let detail = format!("ω(f) has rank {} on ω(A) of dimension {oa}", of.rank());
            rep.probe("left_exact", if image.injective { Ok(()) } else { Err(Witness::new(&[&s.name], detail)) });
        }
    }
    rep.set_data("left_exactness_failures", json!(flat_failures));
    Ok(rep)
}
