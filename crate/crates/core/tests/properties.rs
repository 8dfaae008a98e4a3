use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use rpoisson::algebra::{Monomial, Poly, PrimeChar};
use rpoisson::poisson::PoissonAlgebra;
use rpoisson::quantize::{KernelMode, StarAlgebra};
use rpoisson::restricted::{
    build_pmap, lambda_p, phi_p, phi_p_prime, JacobsonCheck, PMap, PMapEval,
};
use rpoisson::tograph::{edge_multisets, graph_weight};

fn prime(p: u32) -> PrimeChar {
    PrimeChar::new(p).unwrap()
}

/// Polynomials in `nvars` variables with up to `terms` terms of degree at most 3.
fn poly(p: u32, nvars: usize, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, nvars), 1..p), 1..=terms).prop_map(
        move |ts| {
            let pc = prime(p);
            let terms = ts
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= 3)
                .map(|(e, c)| (Monomial::from_exponents(&e), pc.scalar(c as i64)));
            Poly::from_terms(pc, terms)
        },
    )
}

fn plane(p: u32) -> Arc<PoissonAlgebra> {
    Arc::new(PoissonAlgebra::from_strings(prime(p), &["x", "y"], &[("x", "y", "1")], &[]).unwrap())
}

fn zero_pmap(p: u32) -> PMap {
    let alg = plane(p);
    build_pmap(
        alg.clone(),
        vec![alg.zero(), alg.zero()],
        JacobsonCheck::Off,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(5, 3, 4), g in poly(5, 3, 4), h in poly(5, 3, 4)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn frobenius_is_a_ring_map(f in poly(3, 2, 4), g in poly(3, 2, 4)) {
        prop_assert_eq!(f.frobenius(), f.pow(3));
        prop_assert_eq!((&f + &g).frobenius(), f.frobenius() + g.frobenius());
        prop_assert_eq!((&f * &g).frobenius(), &f.frobenius() * &g.frobenius());
    }

    #[test]
    fn divided_partials_compose(f in poly(5, 2, 4), a in 0u32..4, b in 0u32..4) {
        let p = prime(5);
        let lhs = f.divided_partial(0, a).divided_partial(0, b);
        let rhs = f.divided_partial(0, a + b).scale(p.binomial((a + b) as u64, a as u64));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.divided_partial(1, a).scale(p.factorial(a as u64)), f.partial_n(1, a));
    }

    #[test]
    fn display_round_trips(f in poly(7, 3, 5)) {
        let names = ["x", "y", "z"];
        let shown = f.display(&names).to_string();
        prop_assert_eq!(Poly::parse(prime(7), &names, &shown).unwrap(), f);
    }

    #[test]
    fn phi_forms_agree_and_are_symmetric(f in poly(3, 2, 3), g in poly(3, 2, 3)) {
        for p in [3, 5] {
            let alg = plane(p);
            let f = alg.reduce(&Poly::from_terms(prime(p), f.terms().iter().map(|(m, c)| (m.clone(), prime(p).scalar(c.value() as i64)))));
            let g = alg.reduce(&Poly::from_terms(prime(p), g.terms().iter().map(|(m, c)| (m.clone(), prime(p).scalar(c.value() as i64)))));
            let phi = phi_p(&alg, &f, &g);
            prop_assert_eq!(&phi, &phi_p_prime(&alg, &f, &g));
            prop_assert_eq!(&phi, &phi_p(&alg, &g, &f));
            prop_assert_eq!(lambda_p(&*alg, &f, &g), lambda_p(&*alg, &g, &f));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fold_order_does_not_matter(f in poly(3, 2, 5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let pm = zero_pmap(3);
        let want = pm.eval(&f);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..5 {
            let mut terms = f.terms().to_vec();
            terms.shuffle(&mut rng);
            prop_assert_eq!(pm.eval_in_order(&terms), want.clone());
        }
    }

    #[test]
    fn product_rule_for_ad_powers(x in poly(3, 2, 3), y in poly(3, 2, 3), g in poly(3, 2, 3)) {
        let pm = zero_pmap(3);
        let alg = pm.algebra().clone();
        let lhs = alg.ad_power(&alg.mul(&x, &y), 3, &g);
        let image = alg.mul(&alg.frobenius(&x), &pm.eval(&y))
            + alg.mul(&alg.frobenius(&y), &pm.eval(&x))
            + phi_p(&alg, &x, &y);
        prop_assert_eq!(lhs, alg.bracket(&image, &g));
    }

    #[test]
    fn pmap_kills_pth_powers(f in poly(3, 2, 3)) {
        let pm = zero_pmap(3);
        prop_assert!(pm.eval(&f.frobenius()).is_zero());
    }

    #[test]
    fn product_rule_is_closed_under_products(f in poly(3, 2, 2), g in poly(3, 2, 2), h in poly(3, 2, 2)) {
        let pm = zero_pmap(3);
        let alg = pm.algebra().clone();
        let rule = |a: &Poly, b: &Poly| {
            pm.eval(&alg.mul(a, b))
                == alg.mul(&alg.frobenius(a), &pm.eval(b)) + alg.mul(&alg.frobenius(b), &pm.eval(a)) + phi_p(&alg, a, b)
        };
        prop_assert!(rule(&f, &g) && rule(&g, &h) && rule(&alg.mul(&f, &g), &h));
        prop_assert!(rule(&f, &alg.mul(&g, &h)));
    }

    #[test]
    fn star_is_associative(f in poly(3, 2, 3), g in poly(3, 2, 3), h in poly(3, 2, 3)) {
        let s = StarAlgebra::classical_plane(prime(3)).with_truncation(6).unwrap();
        let t = s.truncation();
        let lift = |a: &Poly| rpoisson::algebra::TSeries::constant(a.clone(), t);
        let left = s.star_series(&s.star(&f, &g), &lift(&h)).unwrap();
        let right = s.star_series(&lift(&f), &s.star(&g, &h)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn symmetric_star_is_associative(f in poly(3, 3, 3), g in poly(3, 3, 3), h in poly(3, 3, 3)) {
        let p = prime(3);
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        let upper = [(0, 1, p.scalar(1)), (0, 2, p.scalar(2)), (1, 2, p.scalar(1))];
        let s = StarAlgebra::new(p, names, upper, KernelMode::Symmetric).unwrap().with_truncation(6).unwrap();
        let t = s.truncation();
        let lift = |a: &Poly| rpoisson::algebra::TSeries::constant(a.clone(), t);
        let left = s.star_series(&s.star(&f, &g), &lift(&h)).unwrap();
        let right = s.star_series(&lift(&f), &s.star(&g, &h)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lambda_from_star_powers(f in poly(5, 2, 3), g in poly(5, 2, 3)) {
        let s = StarAlgebra::classical_plane(prime(5));
        let alg = s.classical_limit();
        let top = |a: &Poly| s.star_power(a, 5).unwrap().coeff(4);
        let defect = top(&(&f + &g)) - top(&f) - top(&g);
        prop_assert_eq!(defect, lambda_p(&alg, &f, &g));
    }

    #[test]
    fn weights_depend_only_on_degree_data(f in poly(5, 2, 4)) {
        let mut groups: BTreeMap<Vec<(u32, u32)>, Poly> = BTreeMap::new();
        for g in edge_multisets(3, 5) {
            let mut key = g.degrees();
            key.sort_unstable();
            let w = graph_weight(&g, &f).unwrap();
            if let Some(prev) = groups.get(&key) {
                prop_assert_eq!(prev, &w);
            } else {
                groups.insert(key, w);
            }
        }
    }
}
