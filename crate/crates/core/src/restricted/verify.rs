//! Axiom suites for restricted Poisson algebras.

use super::jacobson::{lambda_p, phi_p, phi_p_prime};
use super::pmap::RestrictedPoissonAlgebra;
use crate::algebra::{Poly, Sampler, Scalar};
use crate::poisson::PoissonAlgebra;
use crate::report::{Check, Report, SuiteConfig};

/// Which compatibility of the p-map with multiplication to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusMode {
    /// `pp(f^2) = 2 f^p pp(f)`, plus the power rule `pp(f^n) = n f^{(n-1)p} pp(f)`.
    Square,
    /// `pp(fg) = f^p pp(g) + g^p pp(f) + Φ_p(f, g)`.
    Product,
}

fn ad_power_check(a: &RestrictedPoissonAlgebra, check: &mut Check, f: &Poly, g: &Poly) {
    let alg = a.base();
    let p = alg.prime().get() as usize;
    let lhs = alg.ad_power(f, p, g);
    let rhs = alg.bracket(&a.pp(f), g);
    check.record_eq(
        lhs == rhs,
        || vec![("f", alg.show(f)), ("g", alg.show(g))],
        || alg.show(&lhs),
        || alg.show(&rhs),
    );
}

fn additivity_check(a: &RestrictedPoissonAlgebra, check: &mut Check, f: &Poly, g: &Poly) {
    let alg = a.base();
    let lhs = a.pp(&(f + g));
    let rhs = a.pp(f) + a.pp(g) + lambda_p(alg, f, g);
    check.record_eq(
        lhs == rhs,
        || vec![("f", alg.show(f)), ("g", alg.show(g))],
        || alg.show(&lhs),
        || alg.show(&rhs),
    );
}

fn semilinearity_check(a: &RestrictedPoissonAlgebra, check: &mut Check, f: &Poly, c: Scalar) {
    let alg = a.base();
    let p = alg.prime();
    let lhs = a.pp(&f.scale(c));
    let rhs = a.pp(f).scale(p.pow(c, p.get() as u64));
    check.record_eq(
        lhs == rhs,
        || vec![("f", alg.show(f)), ("lambda", c.to_string())],
        || alg.show(&lhs),
        || alg.show(&rhs),
    );
}

/// The restricted Lie axioms: `ad_f^p = ad_{pp(f)}`, `pp(λf) = λ^p pp(f)` and
/// `pp(f+g) = pp(f) + pp(g) + Λ_p(f, g)`, on random elements and on all pairs
/// from the check basis.
pub fn verify_restricted_lie(a: &RestrictedPoissonAlgebra, cfg: &SuiteConfig) -> Report {
    let alg = a.base();
    let mut report = Report::for_config("restricted-lie", cfg);
    let mut s = Sampler::new(alg.prime(), cfg.seed);

    let mut unit = Check::new("unit");
    let one = alg.one();
    let pp_one = a.pp(&one);
    unit.record_eq(
        pp_one.is_zero(),
        || vec![("f", alg.show(&one))],
        || alg.show(&pp_one),
        || "0".into(),
    );
    report.push(unit);

    let mut ad = Check::new("ad-power");
    let mut semi = Check::new("semilinearity");
    let mut add = Check::new("additivity");
    for _ in 0..cfg.samples {
        let f = alg.sample(&mut s);
        let g = alg.sample(&mut s);
        let c = s.scalar();
        ad_power_check(a, &mut ad, &f, &g);
        semilinearity_check(a, &mut semi, &f, c);
        additivity_check(a, &mut add, &f, &g);
    }
    report.push(ad);
    report.push(semi);
    report.push(add);

    let basis = alg.check_basis(cfg.degree_bound);
    let mut ad_b = Check::new("ad-power-basis");
    let mut semi_b = Check::new("semilinearity-basis");
    let mut add_b = Check::new("additivity-basis");
    for f in &basis {
        for c in alg.prime().elements() {
            semilinearity_check(a, &mut semi_b, f, c);
        }
        for g in &basis {
            ad_power_check(a, &mut ad_b, f, g);
            additivity_check(a, &mut add_b, f, g);
        }
    }
    report.push(ad_b);
    report.push(semi_b);
    report.push(add_b);
    report
}

fn square_check(a: &RestrictedPoissonAlgebra, check: &mut Check, f: &Poly) {
    let alg = a.base();
    let lhs = a.pp(&alg.mul(f, f));
    let rhs = alg.mul(&alg.frobenius(f), &a.pp(f)).scale_int(2);
    check.record_eq(
        lhs == rhs,
        || vec![("f", alg.show(f))],
        || alg.show(&lhs),
        || alg.show(&rhs),
    );
}

fn product_check(a: &RestrictedPoissonAlgebra, check: &mut Check, f: &Poly, g: &Poly) {
    let alg = a.base();
    let lhs = a.pp(&alg.mul(f, g));
    let rhs = alg.mul(&alg.frobenius(f), &a.pp(g))
        + alg.mul(&alg.frobenius(g), &a.pp(f))
        + phi_p(alg, f, g);
    check.record_eq(
        lhs == rhs,
        || vec![("f", alg.show(f)), ("g", alg.show(g))],
        || alg.show(&lhs),
        || alg.show(&rhs),
    );
}

/// Compatibility of the p-map with multiplication.
///
/// Square mode checks `pp(f^2) = 2 f^p pp(f)` on random elements and on the
/// check basis, and the power rule for `n = 2..5` on small random elements.
/// Product mode checks the product formula on random pairs and on all pairs
/// from the check basis.
pub fn verify_frobenius_condition(
    a: &RestrictedPoissonAlgebra,
    mode: FrobeniusMode,
    cfg: &SuiteConfig,
) -> Report {
    let alg = a.base();
    let mut s = Sampler::new(alg.prime(), cfg.seed);
    let basis = alg.check_basis(cfg.degree_bound);
    match mode {
        FrobeniusMode::Square => {
            let mut report = Report::for_config("frobenius-square", cfg);
            let mut sq = Check::new("square");
            for _ in 0..cfg.samples {
                let f = alg.sample(&mut s);
                square_check(a, &mut sq, &f);
            }
            report.push(sq);
            let mut sq_b = Check::new("square-basis");
            for f in &basis {
                square_check(a, &mut sq_b, f);
            }
            report.push(sq_b);

            let p = alg.prime();
            let mut power = Check::new("power-rule");
            let small = |s: &mut Sampler| match alg.finite_basis() {
                Some(_) => alg.sample(s),
                None => alg.reduce(&s.poly_with(alg.nvars(), 2, 2)),
            };
            for _ in 0..cfg.samples.min(8) {
                let f = small(&mut s);
                let pp_f = a.pp(&f);
                for n in 2..=5u64 {
                    let lhs = a.pp(&alg.pow(&f, n));
                    let rhs = alg
                        .mul(&alg.frobenius(&alg.pow(&f, n - 1)), &pp_f)
                        .scale(p.scalar(n as i64));
                    power.record_eq(
                        lhs == rhs,
                        || vec![("f", alg.show(&f)), ("n", n.to_string())],
                        || alg.show(&lhs),
                        || alg.show(&rhs),
                    );
                }
            }
            report.push(power);
            report
        }
        FrobeniusMode::Product => {
            let mut report = Report::for_config("frobenius-product", cfg);
            let mut prod = Check::new("product");
            for _ in 0..cfg.samples {
                let f = alg.sample(&mut s);
                let g = alg.sample(&mut s);
                product_check(a, &mut prod, &f, &g);
            }
            report.push(prod);
            let mut prod_b = Check::new("product-basis");
            for f in &basis {
                for g in &basis {
                    product_check(a, &mut prod_b, f, g);
                }
            }
            report.push(prod_b);
            report
        }
    }
}

/// Identities of `Φ_p` that hold in every Poisson algebra:
///
/// * `f^p Φ(g,h) - Φ(fg,h) + Φ(f,gh) - h^p Φ(f,g) = 0`
/// * for central `f` (here a constant): `f^p Φ(g,h) = Φ(fg,h) = Φ(g,fh)`
/// * `Φ(f,g+h) - Φ(f,g) - Φ(f,h) = Λ(fg,fh) - f^p Λ(g,h)`
/// * agreement of `Φ_p` with its alternative form, and symmetry of `Φ_p` and `Λ_p`.
pub fn verify_phi_identities(alg: &PoissonAlgebra, cfg: &SuiteConfig) -> Report {
    let mut report = Report::for_config("phi-identities", cfg);
    let mut s = Sampler::new(alg.prime(), cfg.seed);
    let show = |f: &Poly| alg.show(f);
    let fr = |f: &Poly| alg.frobenius(f);

    let mut cocycle = Check::new("cocycle");
    let mut central = Check::new("central-factor");
    let mut distrib = Check::new("distributivity-defect");
    let mut alt = Check::new("alternative-form");
    let mut sym = Check::new("symmetry");
    for _ in 0..cfg.samples {
        let (f, g, h) = (alg.sample(&mut s), alg.sample(&mut s), alg.sample(&mut s));
        let inputs = || vec![("f", show(&f)), ("g", show(&g)), ("h", show(&h))];

        let lhs = alg.mul(&fr(&f), &phi_p(alg, &g, &h)) + phi_p(alg, &f, &alg.mul(&g, &h));
        let rhs = phi_p(alg, &alg.mul(&f, &g), &h) + alg.mul(&fr(&h), &phi_p(alg, &f, &g));
        cocycle.record_eq(lhs == rhs, inputs, || show(&lhs), || show(&rhs));

        let c = alg.constant(s.scalar());
        let a1 = alg.mul(&fr(&c), &phi_p(alg, &g, &h));
        let a2 = phi_p(alg, &alg.mul(&c, &g), &h);
        let a3 = phi_p(alg, &g, &alg.mul(&c, &h));
        central.record_eq(
            a1 == a2 && a2 == a3,
            || vec![("f", show(&c)), ("g", show(&g)), ("h", show(&h))],
            || format!("{} ; {}", show(&a1), show(&a2)),
            || show(&a3),
        );

        let lhs = phi_p(alg, &f, &(&g + &h)) - phi_p(alg, &f, &g) - phi_p(alg, &f, &h);
        let rhs = lambda_p(alg, &alg.mul(&f, &g), &alg.mul(&f, &h))
            - alg.mul(&fr(&f), &lambda_p(alg, &g, &h));
        distrib.record_eq(lhs == rhs, inputs, || show(&lhs), || show(&rhs));

        let phi = phi_p(alg, &f, &g);
        let phi_alt = phi_p_prime(alg, &f, &g);
        alt.record_eq(
            phi == phi_alt,
            || vec![("f", show(&f)), ("g", show(&g))],
            || show(&phi),
            || show(&phi_alt),
        );

        let phi_sw = phi_p(alg, &g, &f);
        let lam = lambda_p(alg, &f, &g);
        let lam_sw = lambda_p(alg, &g, &f);
        sym.record_eq(
            phi == phi_sw && lam == lam_sw,
            || vec![("f", show(&f)), ("g", show(&g))],
            || format!("{} ; {}", show(&phi), show(&lam)),
            || format!("{} ; {}", show(&phi_sw), show(&lam_sw)),
        );
    }
    report.push(cocycle);
    report.push(central);
    report.push(distrib);
    report.push(alt);
    report.push(sym);
    report
}
