//! Compatibility of the primitive coproduct, counit and antipode with the
//! restricted Poisson structure of `S(L)` and `s(L)`.

use crate::algebra::{Monomial, MonomialIdeal, Poly};
use crate::error::{Error, Result};
use crate::report::{Check, Report, SuiteConfig};
use crate::restricted::RestrictedPoissonAlgebra;

use super::tensor::TensorProduct;

fn require_enveloping_shape(h: &RestrictedPoissonAlgebra) -> Result<()> {
    let alg = h.base();
    let n = alg.nvars();
    for ((i, j), v) in alg.table() {
        if !v.is_homogeneous_of(1) {
            return Err(Error::Unsupported(format!(
                "bracket {{{}, {}}} = {} is not linear",
                alg.vars()[*i],
                alg.vars()[*j],
                alg.show(v)
            )));
        }
    }
    for i in 0..n {
        let g = h.pp(&alg.var(i));
        if !g.is_zero() && !g.is_homogeneous_of(1) {
            return Err(Error::Unsupported(format!(
                "p-map image of {} is not linear: {}",
                alg.vars()[i],
                alg.show(&g)
            )));
        }
    }
    let q = alg.quotient();
    if !q.is_zero() && *q != MonomialIdeal::powers(n, alg.prime().get()) {
        return Err(Error::Unsupported("quotient other than (x_i^p)".into()));
    }
    Ok(())
}

/// Checks on all monomials of degree at most `cfg.degree_bound`:
///
/// * `Δ{f, g} = {Δf, Δg}` and `Δ(pp(f)) = pp(Δf)` in `H ⊗ H`, where `Δ` is the
///   algebra map with `Δ(x) = x ⊗ 1 + 1 ⊗ x` on generators;
/// * `ε{f, g} = 0` and `ε(pp(f)) = 0`, where `ε` takes the constant term;
/// * `S{f, g} = {S g, S f}` for the algebra map `S(x) = -x`;
/// * `S(pp(f)) = pp(S f)`, reported for information only.
///
/// `h` must have a linear bracket, linear p-map images of the generators and
/// either no quotient or the quotient by all `x_i^p`.
pub fn hopf_check(h: &RestrictedPoissonAlgebra, cfg: &SuiteConfig) -> Result<Report> {
    require_enveloping_shape(h)?;
    let alg = h.base();
    let n = alg.nvars();
    let t = TensorProduct::new(h, h)?;
    let talg = t.product().base();

    let delta_images: Vec<Poly> = (0..n).map(|i| &talg.var(i) + &talg.var(i + n)).collect();
    let antipode_images: Vec<Poly> = (0..n).map(|i| -alg.var(i)).collect();
    let delta = |f: &Poly| talg.reduce(&f.substitute(&delta_images));
    let antipode = |f: &Poly| alg.reduce(&f.substitute(&antipode_images));

    let monomials: Vec<Poly> = Monomial::all_up_to(n, cfg.degree_bound)
        .iter()
        .map(|m| alg.monomial(m))
        .filter(|f| !f.is_zero())
        .collect();

    let mut report = Report::for_config("hopf", cfg);
    let mut co_br = Check::new("coproduct-bracket");
    let mut co_pp = Check::new("coproduct-pmap");
    let mut eps_br = Check::new("counit-bracket");
    let mut eps_pp = Check::new("counit-pmap");
    let mut s_br = Check::new("antipode-bracket");
    let mut s_pp = Check::new("antipode-pmap")
        .informational()
        .with_note("compatibility of the antipode with the p-map is reported, not required");

    for f in &monomials {
        let pf = h.pp(f);
        let lhs = delta(&pf);
        let rhs = t.product().pp(&delta(f));
        co_pp.record_eq(
            lhs == rhs,
            || vec![("f", alg.show(f))],
            || talg.show(&lhs),
            || talg.show(&rhs),
        );

        if !f.is_constant() {
            let c = pf.constant_term();
            eps_pp.record_eq(
                c.is_zero(),
                || vec![("f", alg.show(f))],
                || c.to_string(),
                || "0".into(),
            );
        }

        let lhs = antipode(&pf);
        let rhs = h.pp(&antipode(f));
        s_pp.record_eq(
            lhs == rhs,
            || vec![("f", alg.show(f))],
            || alg.show(&lhs),
            || alg.show(&rhs),
        );

        for g in &monomials {
            let b = alg.bracket(f, g);
            let inputs = || vec![("f", alg.show(f)), ("g", alg.show(g))];

            let lhs = delta(&b);
            let rhs = talg.bracket(&delta(f), &delta(g));
            co_br.record_eq(lhs == rhs, inputs, || talg.show(&lhs), || talg.show(&rhs));

            let c = b.constant_term();
            eps_br.record_eq(c.is_zero(), inputs, || c.to_string(), || "0".into());

            let lhs = antipode(&b);
            let rhs = alg.bracket(&antipode(g), &antipode(f));
            s_br.record_eq(lhs == rhs, inputs, || alg.show(&lhs), || alg.show(&rhs));
        }
    }
    for c in [co_br, co_pp, eps_br, eps_pp, s_br, s_pp] {
        report.push(c);
    }
    Ok(report)
}
