use std::sync::Arc;

use monocat_core::algmod::{hom_modules, tensor_over_r, Algebra, Module, ModuleMap};
use monocat_core::{Field, Matrix};
use proptest::prelude::*;

fn algebra(choice: usize, f: Field) -> Algebra {
    match choice {
        0 => Algebra::truncated_polynomial(f, 2),
        1 => Algebra::cyclic_group(f, 3),
        2 => Algebra::upper_triangular(f),
        _ => Algebra::product(&[Algebra::ground(f), Algebra::truncated_polynomial(f, 2)]).unwrap(),
    }
}

/// `R / gR` for a generator given by small integer coordinates.
fn cyclic_quotient(alg: &Arc<Algebra>, coords: &[i64]) -> Module {
    let f = alg.field();
    let g = Matrix::from_fn(f, alg.dim(), 1, |i, _| f.from_i64(coords[i % coords.len()]));
    Module::regular_right(alg).quotient(&g).0
}

fn setup() -> impl Strategy<Value = (Arc<Algebra>, Vec<i64>, Vec<i64>)> {
    (0usize..4, prop_oneof![Just(Field::Prime(2)), Just(Field::Prime(3))], proptest::collection::vec(-1i64..=1, 3), proptest::collection::vec(-1i64..=1, 3))
        .prop_map(|(c, f, a, b)| (Arc::new(algebra(c, f)), a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn regular_module_is_a_unit_for_tensor((alg, a, _) in setup()) {
        let m = cyclic_quotient(&alg, &a);
        let r_left = Module::regular_left(&alg);
        prop_assert_eq!(tensor_over_r(&m, &r_left).unwrap().dim(), m.dim());
    }

    #[test]
    fn homs_out_of_r_are_evaluations((alg, a, _) in setup()) {
        let m = cyclic_quotient(&alg, &a);
        prop_assert_eq!(hom_modules(&Module::regular_right(&alg), &m).unwrap().dim(), m.dim());
    }

    #[test]
    fn tensor_preserves_surjections((alg, a, b) in setup()) {
        // R ↠ R/gR induces a surjection M ⊗ R ↠ M ⊗ (R/gR) for left modules
        let f = alg.field();
        let m = cyclic_quotient(&alg, &a);
        let r_left = Module::regular_left(&alg);
        let g = Matrix::from_fn(f, alg.dim(), 1, |i, _| f.from_i64(b[i % b.len()]));
        let (quot, proj) = r_left.quotient(&g);
        let src = tensor_over_r(&m, &r_left).unwrap();
        let dst = tensor_over_r(&m, &quot).unwrap();
        let induced = src.map_to(&dst, &Matrix::identity(f, m.dim()), &proj);
        prop_assert_eq!(induced.rank(), dst.dim());
    }

    #[test]
    fn hom_basis_maps_are_module_maps((alg, a, b) in setup()) {
        let x = cyclic_quotient(&alg, &a);
        let y = cyclic_quotient(&alg, &b);
        for h in hom_modules(&x, &y).unwrap().maps() {
            prop_assert!(ModuleMap::new(x.clone(), y.clone(), h.matrix().clone()).is_ok());
        }
    }
}
