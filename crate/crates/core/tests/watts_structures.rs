use monocat_core::algmod::{Algebra, Module, Side};
use monocat_core::watts::{
    check_monoidal_axioms, check_t_coherence, verify_embedding, verify_monoidal_functor, GradedTensor, MonoidalStructure, NonBifunctorial,
    Watts, WattsError,
};
use monocat_core::{Field, Matrix};

fn sample_of(gt: &GradedTensor, extra: Vec<(String, Module)>) -> Vec<(String, Module)> {
    let mut s = vec![("R".to_string(), gt.regular()), ("I".to_string(), gt.unit())];
    s.extend(extra);
    s
}

fn graded_line(gt: &GradedTensor, degree: usize) -> Module {
    let alg = gt.algebra();
    let f = alg.field();
    let action = (0..alg.dim())
        .map(|i| {
            let e = Matrix::unit_vector(f, alg.dim(), i);
            let v = e.get(degree, 0);
            Matrix::from_fn(f, 1, 1, |_, _| v.clone())
        })
        .collect();
    Module::new(alg.clone(), Side::Right, 1, action).unwrap()
}

#[test]
fn strict_group_algebra_passes_everything() {
    let f = Field::Prime(3);
    let gt = GradedTensor::strict(Algebra::cyclic_group(f, 2)).unwrap();
    let alg = gt.algebra().clone();
    let plus = Module::new(alg.clone(), Side::Right, 1, vec![Matrix::identity(f, 1), Matrix::identity(f, 1)]).unwrap();
    let minus = Module::new(alg.clone(), Side::Right, 1, vec![Matrix::identity(f, 1), Matrix::identity(f, 1).neg()]).unwrap();
    let sample = sample_of(&gt, vec![("L+".into(), plus), ("L-".into(), minus)]);
    let rep = check_monoidal_axioms(&gt, &sample).unwrap();
    assert!(rep.passed(), "{rep}");
    let w = Watts::new(&gt).unwrap();
    let rep = check_t_coherence(&w, &sample).unwrap();
    assert!(rep.passed(), "{rep}");
    let rep = verify_monoidal_functor(&w.transported(), &sample, None).unwrap();
    assert!(rep.passed(), "{rep}");
    let rep = verify_embedding(&w, &sample, &[]).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(w.t().dim, 2);
    assert_eq!(w.t().left1, w.t().left2);
}

#[test]
fn graded_cocycle_passes_everything() {
    let f = Field::Prime(3);
    let mut w = vec![f.one(); 8];
    w[7] = f.from_i64(-1);
    let gt = GradedTensor::new(Algebra::ground(f), 2, w, vec![Vec::new(), Vec::new()]).unwrap();
    let l0 = graded_line(&gt, 0);
    let l1 = graded_line(&gt, 1);
    let sample = sample_of(&gt, vec![("L0".into(), l0), ("L1".into(), l1)]);
    let rep = check_monoidal_axioms(&gt, &sample).unwrap();
    assert!(rep.passed(), "{rep}");
    let wt = Watts::new(&gt).unwrap();
    let rep = check_t_coherence(&wt, &sample).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.data["alpha_prime_rrr_is_identity"], false);
    assert_eq!(wt.t().dim, 4);
    let rep = verify_monoidal_functor(&wt.transported(), &sample, None).unwrap();
    assert!(rep.passed(), "{rep}");
}

/// `dω = 1` for a `Z/2` sign pattern, enumerated directly.
fn is_cocycle(w: &[i64]) -> bool {
    let at = |a: usize, b: usize, c: usize| w[a * 4 + b * 2 + c];
    (0..16usize).all(|q| {
        let (a, b, c, d) = (q >> 3 & 1, q >> 2 & 1, q >> 1 & 1, q & 1);
        at(b, c, d) * at(a, (b + c) % 2, d) * at(a, b, c) == at((a + b) % 2, c, d) * at(a, b, (c + d) % 2)
    })
}

#[test]
fn single_cocycle_flips_break_the_pentagon_exactly_when_the_oracle_says_so() {
    let f = Field::Prime(3);
    let mut signs = vec![1i64; 8];
    signs[7] = -1;
    let base = GradedTensor::new(Algebra::ground(f), 2, signs.iter().map(|&s| f.from_i64(s)).collect(), vec![Vec::new(), Vec::new()]).unwrap();
    let l1 = graded_line(&base, 1);
    for k in 0..8 {
        let mut s = signs.clone();
        s[k] = -s[k];
        let gt = base.with_cocycle(s.iter().map(|&v| f.from_i64(v)).collect()).unwrap();
        let sample = sample_of(&gt, vec![("L1".into(), l1.clone())]);
        let axioms = check_monoidal_axioms(&gt, &sample).unwrap();
        let wt = Watts::new(&gt).unwrap();
        let t = check_t_coherence(&wt, &sample).unwrap();
        let valid = is_cocycle(&s);
        assert_eq!(axioms.check("pentagon").unwrap().passed(), valid, "flip {k}");
        assert_eq!(t.check("t_pentagon").unwrap().passed(), valid, "flip {k}");
        // only the (1,1,1) entry can be flipped without leaving the cocycles
        assert_eq!(valid, k == 7);
    }
}

#[test]
fn non_bifunctorial_structure_is_rejected_when_building_t() {
    let f = Field::Prime(3);
    let nb = NonBifunctorial { inner: GradedTensor::strict(Algebra::cyclic_group(f, 2)).unwrap() };
    assert!(matches!(Watts::new(&nb), Err(WattsError::ActionClash(_))));
}

#[test]
fn negated_xi_fails_the_functor_checks() {
    let f = Field::Prime(3);
    let gt = GradedTensor::new(Algebra::ground(f), 2, vec![f.one(); 8], vec![Vec::new(), Vec::new()]).unwrap();
    let l1 = graded_line(&gt, 1);
    let sample = sample_of(&gt, vec![("L1".into(), l1)]);
    let wt = Watts::new(&gt).unwrap();
    assert!(verify_monoidal_functor(&wt.transported(), &sample, None).unwrap().passed());
    let rep = verify_monoidal_functor(&wt.transported(), &sample, Some(("I", "R"))).unwrap();
    assert!(!rep.check("unit_left").unwrap().passed());
}
