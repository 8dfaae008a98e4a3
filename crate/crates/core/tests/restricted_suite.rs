use std::sync::Arc;

use rpoisson::algebra::{Monomial, PrimeChar};
use rpoisson::poisson::PoissonAlgebra;
use rpoisson::report::SuiteConfig;
use rpoisson::restricted::*;

fn classical(p: u32) -> RestrictedPoissonAlgebra {
    let alg = Arc::new(
        PoissonAlgebra::from_strings(
            PrimeChar::new(p).unwrap(),
            &["x", "y"],
            &[("x", "y", "1")],
            &[],
        )
        .unwrap(),
    );
    let z = alg.zero();
    RestrictedPoissonAlgebra::from_generators(alg, vec![z.clone(), z], JacobsonCheck::default())
        .unwrap()
}

fn full_suite_passes(a: &RestrictedPoissonAlgebra, cfg: &SuiteConfig) {
    let r = verify_restricted_lie(a, cfg);
    assert!(r.passed(), "{r}");
    for mode in [FrobeniusMode::Square, FrobeniusMode::Product] {
        let r = verify_frobenius_condition(a, mode, cfg);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn inductive_pmap_on_classical_plane() {
    full_suite_passes(&classical(3), &SuiteConfig::new(32, 1).with_degree_bound(4));
    full_suite_passes(&classical(5), &SuiteConfig::new(16, 2).with_degree_bound(3));
}

#[test]
fn perturbed_generator_image_breaks_ad_power() {
    let a = classical(3);
    let alg = a.base_arc().clone();
    let bad = RestrictedPoissonAlgebra::from_generators(
        alg.clone(),
        vec![alg.var(0), alg.zero()],
        JacobsonCheck::Off,
    )
    .unwrap();
    let r = verify_restricted_lie(&bad, &SuiteConfig::new(16, 0));
    let c = r.check("ad-power-basis").unwrap();
    assert!(!c.passed());
    let w = c.witness.as_ref().unwrap();
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn semilinear_shift_breaks_square_rule_only() {
    let a = classical(3);
    let alg = a.base();
    let shifted = add_semilinear_shift(&a, vec![(Monomial::var(0), alg.one())]).unwrap();
    let cfg = SuiteConfig::new(16, 3);
    assert!(verify_restricted_lie(&shifted, &cfg).passed());
    let r = verify_frobenius_condition(&shifted, FrobeniusMode::Square, &cfg);
    assert!(!r.passed());
    assert!(r.check("square-basis").unwrap().witness.is_some());
}

#[test]
fn frobenius_derivation_shift_keeps_suite() {
    let a = classical(3);
    let alg = a.base();
    let b = modify_pmap(&a, vec![alg.one(), alg.zero()], 16, 0).unwrap();
    full_suite_passes(&b, &SuiteConfig::new(16, 4));
}

#[test]
fn phi_identities_hold() {
    for p in [3, 5] {
        let a = classical(p);
        let r = verify_phi_identities(a.base(), &SuiteConfig::new(20, p as u64));
        assert!(r.passed(), "{r}");
    }
}
