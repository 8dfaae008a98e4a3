use rpoisson::algebra::{Poly, PrimeChar, Sampler};
use rpoisson::lie::{catalog, Params};
use rpoisson::lierinehart::{verify_lie_rinehart, LieRinehart};
use rpoisson::poisson::PoissonAlgebra;
use rpoisson::quantize::{KernelMode, StarAlgebra};
use rpoisson::report::SuiteConfig;
use rpoisson::restricted::{
    verify_frobenius_condition, verify_restricted_lie, FrobeniusMode, PMapEval,
};
use rpoisson::tograph::{
    class_census, count_equivalent, equivalence_class, oracle_report, vanishing_certificate,
    Tograph,
};

fn prime(p: u32) -> PrimeChar {
    PrimeChar::new(p).unwrap()
}

#[test]
fn derived_pmap_is_restricted_for_small_primes() {
    let cfg = SuiteConfig::new(16, 3).with_degree_bound(2);
    for p in [3, 5] {
        let a = StarAlgebra::classical_plane(prime(p))
            .restricted(&cfg)
            .unwrap();
        for r in [
            verify_restricted_lie(&a, &cfg),
            verify_frobenius_condition(&a, FrobeniusMode::Square, &cfg),
            verify_frobenius_condition(&a, FrobeniusMode::Product, &cfg),
        ] {
            assert!(r.passed(), "p = {p}:\n{r}");
        }
    }
}

#[test]
fn derived_pmap_matches_closed_forms() {
    for (name, p) in [("classical2", 3), ("classical2-p5", 5)] {
        let star = StarAlgebra::classical_plane(prime(p));
        let derived = star.derive_pmap(&SuiteConfig::new(4, 0)).unwrap();
        let closed = catalog(name, prime(p), &Params::new()).unwrap();
        let mut s = Sampler::new(prime(p), 17);
        for _ in 0..20 {
            let f = s.poly_with(2, 3, 5);
            assert_eq!(derived.eval(&f), closed.pp(&f), "f = {}", star.show(&f));
        }
    }
}

#[test]
fn symmetric_kernel_has_the_same_classical_limit() {
    let p = prime(3);
    let alg = PoissonAlgebra::from_strings(
        p,
        &["x", "y", "z"],
        &[("x", "y", "1"), ("y", "z", "2")],
        &[],
    )
    .unwrap();
    for mode in [KernelMode::Onesided, KernelMode::Symmetric] {
        let star = StarAlgebra::from_poisson(&alg, mode).unwrap();
        assert_eq!(star.classical_limit().table(), alg.table());
        let f = alg.parse("x y + z^2").unwrap();
        assert!(star.check_vanishing(&f, &SuiteConfig::new(8, 0)).passed());
    }
}

#[test]
fn non_constant_tables_are_rejected() {
    let alg = PoissonAlgebra::from_strings(prime(3), &["x", "y"], &[("x", "y", "x")], &[]).unwrap();
    assert!(StarAlgebra::from_poisson(&alg, KernelMode::Onesided).is_err());
}

#[test]
fn tograph_oracle_and_certificates() {
    for p in [3, 5] {
        let mut s = Sampler::new(prime(p), 23);
        let fs: Vec<Poly> = (0..6).map(|_| s.poly_with(2, 3, 4)).collect();
        let r = oracle_report(prime(p), &fs, &SuiteConfig::new(6, 23));
        assert!(r.passed(), "{r}");
    }
    for p in [3, 5, 7] {
        for n in 1..=p as usize - 2 {
            let r = vanishing_certificate(n, prime(p)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
    assert!(vanishing_certificate(4, prime(5)).is_err());
}

#[test]
fn top_order_has_a_connected_class() {
    for p in [3, 5] {
        let census = class_census(p as usize - 1, p);
        assert!(census
            .iter()
            .any(|c| c.profile.component_count() == 1 && c.size % p as u128 != 0));
    }
}

#[test]
fn class_sizes_of_small_examples() {
    // a path through three of five vertices: the two isolated vertices and the path
    let g = Tograph::new(5, [(1, 2), (2, 3)]).unwrap();
    let profile = equivalence_class(&g);
    assert_eq!(profile.component_count(), 3);
    assert_eq!(count_equivalent(&profile).unwrap(), 10);
}

#[test]
fn lie_rinehart_on_symmetric_sl2() {
    let a = catalog("sl2-sym", prime(3), &Params::new()).unwrap();
    let lr = LieRinehart::new(a).unwrap();
    let r = verify_lie_rinehart(&lr, &SuiteConfig::new(32, 4));
    assert!(r.passed(), "{r}");
}

#[test]
fn lie_rinehart_control_fails_only_where_expected() {
    let a = catalog("classical2", prime(3), &Params::new()).unwrap();
    let lr = LieRinehart::new(a).unwrap().without_correction();
    let r = verify_lie_rinehart(&lr, &SuiteConfig::new(32, 4));
    assert!(!r.check("scalar-multiple").unwrap().passed());
    for name in ["antisymmetry", "jacobi", "anchor-leibniz", "anchor-bracket"] {
        assert!(r.check(name).unwrap().passed(), "{name}");
    }
}
