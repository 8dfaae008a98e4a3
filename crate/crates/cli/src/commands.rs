use std::path::Path;

use rpoisson::algebra::{Monomial, PrimeChar};
use rpoisson::lie::{catalog, hopf_check, verify_tensor, Params, TensorProduct};
use rpoisson::lierinehart::{verify_lie_rinehart, LieRinehart};
use rpoisson::poisson::verify_poisson;
use rpoisson::quantize::{KernelMode, StarAlgebra};
use rpoisson::report::{Check, Report, SuiteConfig};
use rpoisson::restricted::{
    verify_frobenius_condition, verify_restricted_lie, FrobeniusMode, JacobsonCheck, PMapEval,
};
use rpoisson::tograph::{class_census, combinatorial_m, vanishing_certificate};
use serde_json::{json, Value};

use crate::args::{Cli, Command, GlobalArgs, Mode, SourceArgs, Suite};
use crate::error::CliError;
use crate::output::Outcome;
use crate::specfile::{Loaded, SpecFile};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { source, suite } => verify(g, source, *suite),
        Command::BuildPmap { source, out } => build_pmap(g, source, out.as_deref()),
        Command::Quantize { source, mode, f } => quantize(g, source, *mode, f),
        Command::Tograph { p, n, f } => tograph(g, *p, *n, f.as_deref()),
        Command::Tensor { source } => tensor(g, source),
        Command::LieRinehart {
            source,
            without_correction,
        } => lie_rinehart(g, source, *without_correction),
        Command::Hopf { source } => hopf(g, source),
    }
}

fn config(g: &GlobalArgs, default_bound: u32) -> SuiteConfig {
    SuiteConfig::new(g.samples, g.seed).with_degree_bound(g.degree_bound.unwrap_or(default_bound))
}

fn load_all(source: &SourceArgs, check: JacobsonCheck) -> Result<Vec<Loaded>, CliError> {
    let params: Params = source.params.iter().cloned().collect();
    let mut out = Vec::new();
    for path in &source.spec {
        out.push(SpecFile::read(path)?.load(path.display().to_string(), check)?);
    }
    for name in &source.catalog {
        out.push(SpecFile::catalog(name, source.p, params.clone()).load(name.clone(), check)?);
    }
    Ok(out)
}

fn load_one(source: &SourceArgs, check: JacobsonCheck) -> Result<Loaded, CliError> {
    let mut all = load_all(source, check)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => Err(CliError::Usage(format!(
            "expected exactly one --spec or --catalog, got {k}"
        ))),
    }
}

fn describe(out: &mut Outcome, l: &Loaded) {
    out.detail("algebra", l.label.clone());
    out.detail("p", l.prime().get());
    out.detail("vars", l.base.vars().to_vec());
    out.line(format!(
        "algebra {} over F_{} in {}",
        l.label,
        l.prime().get(),
        l.base.vars().join(", ")
    ));
}

fn verify(g: &GlobalArgs, source: &SourceArgs, suite: Suite) -> Result<Outcome, CliError> {
    let l = load_one(source, JacobsonCheck::Off)?;
    let cfg = config(g, 3);
    let mut out = Outcome::new("verify");
    describe(&mut out, &l);
    if matches!(suite, Suite::Poisson | Suite::All) {
        out.report(verify_poisson(&l.base, &cfg));
    }
    if matches!(suite, Suite::Lie | Suite::All) {
        out.report(verify_restricted_lie(l.restricted()?, &cfg));
    }
    if matches!(suite, Suite::Frobenius | Suite::All) {
        let a = l.restricted()?;
        out.report(verify_frobenius_condition(a, FrobeniusMode::Square, &cfg));
        out.report(verify_frobenius_condition(a, FrobeniusMode::Product, &cfg));
    }
    Ok(out)
}

fn build_pmap(
    g: &GlobalArgs,
    source: &SourceArgs,
    path: Option<&Path>,
) -> Result<Outcome, CliError> {
    let l = load_one(source, JacobsonCheck::default())?;
    let a = l.restricted()?;
    let alg = a.base();
    let bound = g.degree_bound.unwrap_or(3);
    let (monomials, basis) = match alg.finite_basis() {
        Some(b) => (b.to_vec(), "finite".to_string()),
        None => (
            Monomial::all_up_to(alg.nvars(), bound),
            format!("degree <= {bound}"),
        ),
    };
    let mut out = Outcome::new("build-pmap");
    describe(&mut out, &l);
    out.line(format!("basis: {basis}"));
    let mut entries = Vec::new();
    for m in &monomials {
        let f = alg.monomial(m);
        let (key, value) = (alg.show(&f), alg.show(&a.pp(&f)));
        out.line(format!("pp({key}) = {value}"));
        entries.push(json!({ "monomial": key, "value": value }));
    }
    out.detail("basis", basis);
    out.detail("entries", Value::Array(entries.clone()));
    if let Some(path) = path {
        let table = json!({
            "p": l.prime().get(),
            "vars": alg.vars(),
            "basis": out.details["basis"],
            "entries": entries,
        });
        let mut text = serde_json::to_string_pretty(&table).expect("table serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        })?;
        out.detail("out", path.display().to_string());
        out.line(format!(
            "wrote {} entries to {}",
            monomials.len(),
            path.display()
        ));
    }
    Ok(out)
}

/// The closed-form p-map of the two-variable constant bracket, where known.
fn closed_form(
    star: &StarAlgebra,
) -> Option<(&'static str, rpoisson::restricted::RestrictedPoissonAlgebra)> {
    let name = match star.prime().get() {
        3 => "classical2",
        5 => "classical2-p5",
        _ => return None,
    };
    if star.mode() != KernelMode::Onesided || star.nvars() != 2 || star.coefficient(0, 1).is_zero()
    {
        return None;
    }
    catalog(name, star.prime(), &Params::new())
        .ok()
        .map(|a| (name, a))
}

fn quantize(g: &GlobalArgs, source: &SourceArgs, mode: Mode, f: &str) -> Result<Outcome, CliError> {
    let l = load_one(source, JacobsonCheck::Off)?;
    let mode = match mode {
        Mode::Onesided => KernelMode::Onesided,
        Mode::Symmetric => KernelMode::Symmetric,
    };
    let star = StarAlgebra::from_poisson(&l.base, mode)?;
    let f = star.parse(f).map_err(CliError::field("f"))?;
    let cfg = config(g, 3);
    let mut out = Outcome::new("quantize");
    describe(&mut out, &l);
    out.detail("mode", mode.to_string());
    out.detail("f", star.show(&f));
    out.line(format!("mode {mode}, f = {}", star.show(&f)));

    let ms = star.m_coefficients(&f)?;
    let mut shown = Vec::new();
    for (k, m) in ms.iter().enumerate() {
        out.line(format!("M_{} = {}", k + 1, star.show(m)));
        shown.push(Value::String(star.show(m)));
    }
    out.detail("m", Value::Array(shown));
    out.report(star.check_vanishing(&f, &cfg));

    let derived = star.derive_pmap(&cfg)?.eval(&f);
    out.detail("derived", star.show(&derived));
    out.line(format!("derived pp(f) = {}", star.show(&derived)));
    if let Some((name, a)) = closed_form(&star) {
        let closed = a.pmap().eval(&f);
        let mut report = Report::for_config("closed-form", &cfg);
        let mut check = Check::new(format!("matches-{name}"));
        check.record_eq(
            derived == closed,
            || vec![("f", star.show(&f))],
            || star.show(&derived),
            || star.show(&closed),
        );
        report.push(check);
        out.detail("closed_form", star.show(&closed));
        out.report(report);
    }
    Ok(out)
}

fn tograph(g: &GlobalArgs, p: i64, n: usize, f: Option<&str>) -> Result<Outcome, CliError> {
    let p = PrimeChar::new(u32::try_from(p).unwrap_or(0)).map_err(CliError::field("p"))?;
    let pv = p.get() as usize;
    if n == 0 || n > pv - 1 {
        return Err(rpoisson::Error::OrderOutOfRange {
            n,
            reason: format!("need 1 <= n <= {} for p = {pv}", pv - 1),
        }
        .into());
    }
    let mut out = Outcome::new("tograph");
    out.detail("p", pv);
    out.detail("n", n);
    out.line(format!("tographs with {n} edges on {pv} vertices"));
    let mut classes = Vec::new();
    for c in class_census(n, p.get()) {
        let divisible = c.size % pv as u128 == 0;
        out.line(format!(
            "  {}: N = {}, members = {}, {}",
            c.profile.describe(),
            c.size,
            c.members,
            if divisible {
                "divisible"
            } else {
                "not divisible"
            }
        ));
        classes.push(json!({
            "class": c.profile.describe(),
            "components": c.profile.component_count(),
            "size": c.size.to_string(),
            "members": c.members.to_string(),
            "divisible": divisible,
        }));
    }
    out.detail("classes", Value::Array(classes));
    if n <= pv - 2 {
        out.report(vanishing_certificate(n, p)?);
    }
    if let Some(f) = f {
        let star = StarAlgebra::classical_plane(p);
        let f = star.parse(f).map_err(CliError::field("f"))?;
        let cfg = config(g, 3);
        let lhs = combinatorial_m(&f, n, p)?;
        let rhs = star.extract_m(&f, n)?;
        out.line(format!("combinatorial M_{n} = {}", star.show(&lhs)));
        out.line(format!("star product M_{n} = {}", star.show(&rhs)));
        out.detail("combinatorial", star.show(&lhs));
        out.detail("star", star.show(&rhs));
        let mut report = Report::for_config("tograph-oracle", &cfg);
        let mut check = Check::new("combinatorial-equals-star");
        check.record_eq(
            lhs == rhs,
            || vec![("f", star.show(&f)), ("n", n.to_string())],
            || star.show(&lhs),
            || star.show(&rhs),
        );
        report.push(check);
        out.report(report);
    }
    Ok(out)
}

fn tensor(g: &GlobalArgs, source: &SourceArgs) -> Result<Outcome, CliError> {
    let loaded = load_all(source, JacobsonCheck::Off)?;
    let [a, b] = <[Loaded; 2]>::try_from(loaded).map_err(|v| {
        CliError::Usage(format!(
            "tensor needs exactly two algebras, got {}",
            v.len()
        ))
    })?;
    let t = TensorProduct::new(a.restricted()?, b.restricted()?)?;
    let cfg = config(g, 3);
    let mut out = Outcome::new("tensor");
    let prod = t.product();
    out.detail("left", a.label.clone());
    out.detail("right", b.label.clone());
    out.detail("p", prod.base().prime().get());
    out.detail("vars", prod.base().vars().to_vec());
    out.line(format!(
        "{} (x) {} in {}",
        a.label,
        b.label,
        prod.base().vars().join(", ")
    ));
    out.report(verify_tensor(&t, &cfg));
    out.report(verify_restricted_lie(prod, &cfg));
    out.report(verify_frobenius_condition(
        prod,
        FrobeniusMode::Square,
        &cfg,
    ));
    out.report(verify_frobenius_condition(
        prod,
        FrobeniusMode::Product,
        &cfg,
    ));
    Ok(out)
}

fn lie_rinehart(
    g: &GlobalArgs,
    source: &SourceArgs,
    without_correction: bool,
) -> Result<Outcome, CliError> {
    let l = load_one(source, JacobsonCheck::Off)?;
    let mut lr = LieRinehart::new(l.restricted()?.clone())?;
    if without_correction {
        lr = lr.without_correction();
    }
    let mut out = Outcome::new("lie-rinehart");
    describe(&mut out, &l);
    out.detail("correction", !without_correction);
    out.report(verify_lie_rinehart(&lr, &config(g, 3)));
    Ok(out)
}

fn hopf(g: &GlobalArgs, source: &SourceArgs) -> Result<Outcome, CliError> {
    let l = load_one(source, JacobsonCheck::Off)?;
    let mut out = Outcome::new("hopf");
    describe(&mut out, &l);
    out.report(hopf_check(l.restricted()?, &config(g, 2))?);
    Ok(out)
}
