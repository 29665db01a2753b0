use proptest::prelude::*;
use quadcover_core::polyduality::{
    alpha_from_polynomial, dual_form, kernel_generator, proj_spec_check,
};
use quadcover_core::{PolyConvention, QuadraticPolynomial, Ring, RingElem};

#[test]
fn kernel_generator_generic() {
    let r = Ring::polynomial(&Ring::rational(), &["a", "b", "c"]).unwrap();
    let v: Vec<RingElem> = (0..3).map(|i| RingElem::var(&r, i).unwrap()).collect();
    let g = QuadraticPolynomial::new(
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        PolyConvention::GammaB,
    )
    .unwrap();
    let k = kernel_generator(&g).unwrap();
    assert_eq!(k.to_array(), [-&v[0], -&v[1], -&v[2]]);
}

#[test]
fn proj_spec_exhaustive_small_fields() {
    for p in [3u64, 5, 7] {
        let r = Ring::modular(p).unwrap();
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                for c in 0..p as i64 {
                    if (a, b, c) == (0, 0, 0) {
                        continue;
                    }
                    let g = QuadraticPolynomial::from_ints(&r, a, b, c, PolyConvention::Gamma2B);
                    let rep = proj_spec_check(&g).unwrap();
                    assert!(rep.relation_in_span, "({a},{b},{c}) mod {p}");
                    assert!(rep.generator_value.is_unit().is_yes());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn routes_agree(a in -50i64..50, b in -50i64..50, c in -50i64..50, twob in any::<bool>()) {
        let conv = if twob { PolyConvention::Gamma2B } else { PolyConvention::GammaB };
        let g = QuadraticPolynomial::from_ints(&Ring::rational(), a, b, c, conv);
        let (x, y) = (alpha_from_polynomial(&g), dual_form(&g).alpha_matrix());
        prop_assert_eq!(x.matrix(), y.matrix());
        prop_assert_eq!(g.to_gamma_b().to_gamma_2b(), g.to_gamma_2b());
    }

    #[test]
    fn proj_spec_over_prime_fields(
        p in prop::sample::select(vec![11u64, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]),
        a in 0i64..97, b in 0i64..97, c in 0i64..97,
    ) {
        let r = Ring::modular(p).unwrap();
        let g = QuadraticPolynomial::from_ints(&r, a, b, c, PolyConvention::Gamma2B);
        prop_assume!(!g.coefficients().iter().all(RingElem::is_zero));
        let rep = proj_spec_check(&g).unwrap();
        prop_assert!(rep.relation_in_span);
        prop_assert!(rep.generator_value.is_unit().is_yes());
    }

    #[test]
    fn proj_spec_over_q(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        prop_assume!((a, b, c) != (0, 0, 0));
        let g = QuadraticPolynomial::from_ints(&Ring::rational(), a, b, c, PolyConvention::Gamma2B);
        let rep = proj_spec_check(&g).unwrap();
        prop_assert!(rep.relation_in_span);
        prop_assert_eq!(rep.algebra.d().clone(), RingElem::from_int(&Ring::rational(), b * b - a * c));
    }
}
