//! Natural transformations between `- ⊗_R P` and `- ⊗_R Q` versus
//! bimodule maps `P → Q`.

use std::sync::Arc;

use rand::Rng;

use crate::algmod::{hom_bimodules, hom_modules, intertwines, left_unit_matrix, tensor_over_r, Algebra, Bimodule, Module, TensorProduct};
use crate::exactla::{Field, Matrix};

use super::checks::Sample;
use super::WattsError;

fn presentations(p: &Bimodule, sample: &Sample) -> Result<Vec<TensorProduct>, WattsError> {
    let left = p.as_left_module();
    sample.iter().map(|(_, m)| Ok(tensor_over_r(m, &left)?)).collect()
}

/// The family `id_M ⊗ f: M ⊗_R P → M ⊗_R Q` over `sample`.
pub fn induced_family(p: &Bimodule, q: &Bimodule, f: &Matrix, sample: &Sample) -> Result<Vec<Matrix>, WattsError> {
    let tp = presentations(p, sample)?;
    let tq = presentations(q, sample)?;
    Ok(sample
        .iter()
        .zip(tp.iter().zip(&tq))
        .map(|((_, m), (a, b))| a.map_to(b, &Matrix::identity(m.field(), m.dim()), f))
        .collect())
}

/// Recovers the bimodule map `f = u_Q ∘ c_R ∘ u_P^{-1}` from a natural
/// family `c_M: M ⊗_R P → M ⊗_R Q`.
///
/// `sample` must contain the regular module `R_R`. The family is checked for
/// naturality on every basis morphism between sample objects, and each
/// component is compared with `id ⊗ f`.
pub fn nat_to_bimodule_hom(p: &Bimodule, q: &Bimodule, sample: &Sample, family: &[Matrix]) -> Result<Matrix, WattsError> {
    let alg = p.algebra().clone();
    let field = alg.field();
    if family.len() != sample.len() {
        return Err(WattsError::NotNatural(format!("{} components for {} objects", family.len(), sample.len())));
    }
    let regular = Module::regular_right(&alg);
    let r_index = sample
        .iter()
        .position(|(_, m)| *m == regular)
        .ok_or_else(|| WattsError::NotNatural("the sample must contain R_R".into()))?;
    let tp = presentations(p, sample)?;
    let tq = presentations(q, sample)?;

    for (k, ((name, _), c)) in sample.iter().zip(family).enumerate() {
        let src: Vec<Matrix> = p.right().iter().map(|r| tp[k].induce_right(r)).collect();
        let dst: Vec<Matrix> = q.right().iter().map(|r| tq[k].induce_right(r)).collect();
        if c.shape() != (tq[k].dim(), tp[k].dim()) || !intertwines(c, &src, &dst) {
            return Err(WattsError::NotNatural(format!("component at {name} is not a map of right modules")));
        }
    }
    for (a, (an, am)) in sample.iter().enumerate() {
        for (b, (bn, bm)) in sample.iter().enumerate() {
            for h in hom_modules(am, bm)?.maps() {
                let hp = tp[a].map_to(&tp[b], h.matrix(), &Matrix::identity(field, p.dim()));
                let hq = tq[a].map_to(&tq[b], h.matrix(), &Matrix::identity(field, q.dim()));
                if family[b].mul(&hp) != hq.mul(&family[a]) {
                    return Err(WattsError::NotNatural(format!("square for a map {an} → {bn} does not commute")));
                }
            }
        }
    }

    let up = left_unit_matrix(&alg, &tp[r_index], p.left(), p.dim());
    let uq = left_unit_matrix(&alg, &tq[r_index], q.left(), q.dim());
    let up_inv = up.inverse().ok_or_else(|| WattsError::NotInvertible { map: "u".into(), objects: "R, P".into() })?;
    let f = uq.mul(&family[r_index]).mul(&up_inv);
    if !intertwines(&f, p.left(), q.left()) {
        return Err(WattsError::NotBalanced("not left R-linear".into()));
    }
    if !intertwines(&f, p.right(), q.right()) {
        return Err(WattsError::NotBalanced("not right R-linear".into()));
    }
    for (k, (name, m)) in sample.iter().enumerate() {
        if tp[k].map_to(&tq[k], &Matrix::identity(field, m.dim()), &f) != family[k] {
            return Err(WattsError::NotNatural(format!("component at {name} differs from id ⊗ f")));
        }
    }
    Ok(f)
}

/// A small algebra chosen at random, with its name. All have dimension at most 4.
pub fn random_algebra<G: Rng>(rng: &mut G, field: Field) -> (String, Algebra) {
    let k = || Algebra::ground(field);
    match rng.gen_range(0..9) {
        0 => ("K".into(), k()),
        1 => ("K×K".into(), Algebra::product(&[k(), k()]).expect("same field")),
        2 => ("K[x]/x^2".into(), Algebra::truncated_polynomial(field, 2)),
        3 => ("K[x]/x^3".into(), Algebra::truncated_polynomial(field, 3)),
        4 => ("K[Z/2]".into(), Algebra::cyclic_group(field, 2)),
        5 => ("K[Z/3]".into(), Algebra::cyclic_group(field, 3)),
        6 => ("T_2(K)".into(), Algebra::upper_triangular(field)),
        7 => ("M_2(K)".into(), Algebra::matrix_algebra(field, 2)),
        _ => (
            "K[x]/x^2×K".into(),
            Algebra::product(&[Algebra::truncated_polynomial(field, 2), k()]).expect("same field"),
        ),
    }
}

fn random_scalar<G: Rng>(rng: &mut G, field: Field) -> crate::exactla::Scalar {
    match field.elements() {
        Some(all) => all[rng.gen_range(0..all.len())].clone(),
        None => field.from_i64(rng.gen_range(-3..=3)),
    }
}

fn random_vector<G: Rng>(rng: &mut G, field: Field, n: usize) -> Matrix {
    Matrix::from_fn(field, n, 1, |_, _| random_scalar(rng, field))
}

fn random_bimodule<G: Rng>(rng: &mut G, alg: &Arc<Algebra>) -> Bimodule {
    let r = Bimodule::regular(alg);
    match rng.gen_range(0..3) {
        0 => r,
        1 if alg.dim() <= 2 => Bimodule::free(alg),
        _ => r.direct_sum(&r).expect("same algebra"),
    }
}

/// Result of one randomized round trip `f ↦ (id ⊗ f) ↦ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripOutcome {
    pub algebra: String,
    pub p_dim: usize,
    pub q_dim: usize,
    pub hom_dim: usize,
    pub recovered: bool,
}

/// Picks an algebra, bimodules `P`, `Q`, and a random bimodule map `f`;
/// induces the family over a sample of right modules and recovers `f`.
pub fn roundtrip_trial<G: Rng>(rng: &mut G, field: Field) -> Result<RoundtripOutcome, WattsError> {
    let (name, alg) = random_algebra(rng, field);
    let alg = Arc::new(alg);
    let regular = Module::regular_right(&alg);
    let mut sample: Vec<(String, Module)> = vec![("R".into(), regular.clone())];
    sample.push(("R⊕R".into(), regular.direct_sum(&regular)?));
    for k in 0..2 {
        let g = random_vector(rng, field, alg.dim());
        let (quot, _) = regular.quotient(&g);
        sample.push((format!("R/g{k}R"), quot));
    }
    roundtrip_on(rng, name, &alg, &sample)
}

/// One round trip over a given algebra and sample; the sample must contain `R_R`.
pub fn roundtrip_on<G: Rng>(rng: &mut G, name: String, alg: &Arc<Algebra>, sample: &Sample) -> Result<RoundtripOutcome, WattsError> {
    let field = alg.field();
    let p = random_bimodule(rng, alg);
    let q = random_bimodule(rng, alg);
    let basis = hom_bimodules(&p, &q)?;
    let mut f = Matrix::zeros(field, q.dim(), p.dim());
    for b in &basis {
        f = f.add(&b.scale(&random_scalar(rng, field)));
    }
    let family = induced_family(&p, &q, &f, sample)?;
    let back = nat_to_bimodule_hom(&p, &q, sample, &family)?;
    Ok(RoundtripOutcome { algebra: name, p_dim: p.dim(), q_dim: q.dim(), hom_dim: basis.len(), recovered: back == f })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn round_trips_recover_the_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [Field::Prime(2), Field::Prime(3)] {
            for _ in 0..6 {
                let out = roundtrip_trial(&mut rng, field).unwrap();
                assert!(out.recovered, "{out:?}");
            }
        }
    }

    #[test]
    fn unnatural_family_is_rejected() {
        let f = Field::Prime(3);
        let alg = Arc::new(Algebra::cyclic_group(f, 2));
        let p = Bimodule::regular(&alg);
        let r = Module::regular_right(&alg);
        let sample = vec![("R".to_string(), r.clone()), ("R⊕R".to_string(), r.direct_sum(&r).unwrap())];
        let mut family = induced_family(&p, &p, &Matrix::identity(f, 2), &sample).unwrap();
        // scale only the R⊕R component: each component is linear but the squares fail
        family[1] = family[1].scale(&f.from_i64(2));
        assert!(matches!(nat_to_bimodule_hom(&p, &p, &sample, &family), Err(WattsError::NotNatural(_))));
    }

    #[test]
    fn one_sided_map_is_not_balanced() {
        // left multiplication by E11 on T_2(K) commutes with the right action only
        let f = Field::Prime(2);
        let alg = Arc::new(Algebra::upper_triangular(f));
        let p = Bimodule::regular(&alg);
        let r = Module::regular_right(&alg);
        let sample = vec![("R".to_string(), r)];
        let g = alg.left_mul()[0].clone();
        let family = induced_family(&p, &p, &g, &sample).unwrap();
        let err = nat_to_bimodule_hom(&p, &p, &sample, &family);
        assert!(matches!(err, Err(WattsError::NotBalanced(_)) | Err(WattsError::NotNatural(_))), "{err:?}");
    }
}
