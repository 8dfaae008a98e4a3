//! Poisson algebras given by a bracket table on generators, optionally
//! modulo a monomial ideal.

use std::collections::{BTreeMap, HashSet};

use crate::algebra::{Monomial, MonomialIdeal, Poly, PrimeChar, Sampler, Scalar};
use crate::error::{Error, Result};
use crate::report::{Check, Report, SuiteConfig};

/// A polynomial algebra `F_p[x_0, ..., x_{n-1}] / I` with a Poisson bracket
/// determined by its values on pairs of generators.
///
/// Elements are plain [`Poly`] values over this algebra's variables; every
/// operation that can leave the quotient's normal form reduces its result.
#[derive(Clone, Debug)]
pub struct PoissonAlgebra {
    p: PrimeChar,
    vars: Vec<String>,
    table: BTreeMap<(usize, usize), Poly>,
    quotient: MonomialIdeal,
    basis: Option<Vec<Monomial>>,
}

impl PoissonAlgebra {
    /// Builds and validates an algebra: Jacobi on generator triples and
    /// bracket-closure of the quotient ideal.
    pub fn new(
        p: PrimeChar,
        vars: Vec<String>,
        table: impl IntoIterator<Item = ((usize, usize), Poly)>,
        quotient: Option<MonomialIdeal>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(p, vars, table, quotient)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Builds an algebra checking only its shape, not the Jacobi identity or
    /// ideal closure. Used to exhibit failures of those axioms.
    pub fn new_unchecked(
        p: PrimeChar,
        vars: Vec<String>,
        table: impl IntoIterator<Item = ((usize, usize), Poly)>,
        quotient: Option<MonomialIdeal>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::NameCollision(v.clone()));
            }
        }
        let n = vars.len();
        let quotient = quotient.unwrap_or_default();
        if let Some(g) = quotient.generators().iter().find(|g| g.support_len() > n) {
            return Err(Error::ForeignElement(format!("ideal generator {g:?}")));
        }
        let mut entries: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for ((i, j), f) in table {
            if i >= n || j >= n {
                return Err(Error::InvalidTable(format!(
                    "generator index ({i}, {j}) out of range for {n} variables"
                )));
            }
            if f.prime() != p {
                return Err(Error::CharMismatch(p.get(), f.prime().get()));
            }
            if f.support_len() > n {
                return Err(Error::ForeignElement(format!("bracket value {f:?}")));
            }
            if i == j {
                if !f.is_zero() {
                    return Err(Error::InvalidTable(format!(
                        "{{{0}, {0}}} must be zero",
                        vars[i]
                    )));
                }
                continue;
            }
            let (key, val) = if i < j { ((i, j), f) } else { ((j, i), -f) };
            let val = quotient.reduce(&val);
            if let Some(prev) = entries.get(&key) {
                if *prev != val {
                    return Err(Error::InvalidTable(format!(
                        "conflicting entries for {{{}, {}}}",
                        vars[key.0], vars[key.1]
                    )));
                }
            }
            if !val.is_zero() {
                entries.insert(key, val);
            }
        }
        let basis = if quotient.is_zero() {
            None
        } else {
            quotient.finite_basis(n)
        };
        Ok(PoissonAlgebra {
            p,
            vars,
            table: entries,
            quotient,
            basis,
        })
    }

    /// Convenience constructor from strings: `(u, v, value)` sets `{u, v} = value`.
    pub fn from_strings(
        p: PrimeChar,
        vars: &[&str],
        table: &[(&str, &str, &str)],
        quotient: &[&str],
    ) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let index = |name: &str| {
            names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::InvalidTable(format!("unknown generator {name:?}")))
        };
        let mut entries = Vec::new();
        for (u, v, val) in table {
            entries.push(((index(u)?, index(v)?), Poly::parse(p, &names, val)?));
        }
        let ideal = if quotient.is_empty() {
            None
        } else {
            let mut gens = Vec::new();
            for q in quotient {
                gens.push(parse_monomial(p, &names, q)?);
            }
            Some(MonomialIdeal::new(gens))
        };
        Self::new(p, names, entries, ideal)
    }

    fn validate(&self) -> Result<()> {
        let n = self.nvars();
        let x: Vec<Poly> = (0..n).map(|i| self.var(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(&x[i], &x[j], &x[k]);
                    if !r.is_zero() {
                        return Err(Error::JacobiViolation {
                            a: self.vars[i].clone(),
                            b: self.vars[j].clone(),
                            c: self.vars[k].clone(),
                            residual: self.show(&r),
                        });
                    }
                }
            }
        }
        for (i, xi) in x.iter().enumerate() {
            for m in self.quotient.generators() {
                let mp = Poly::term(self.p, m.clone(), Scalar::ONE);
                let b = self.bracket_unreduced(xi, &mp);
                if !self.quotient.contains_poly(&b) {
                    return Err(Error::NotPoissonClosed {
                        generator: self.vars[i].clone(),
                        ideal_generator: self.show(&mp),
                        bracket: self.show(&b),
                    });
                }
            }
        }
        Ok(())
    }

    /// The same bracket modulo the sum of the current quotient ideal and `extra`.
    pub fn with_quotient(&self, extra: &MonomialIdeal) -> Result<Self> {
        let gens = self
            .quotient
            .generators()
            .iter()
            .chain(extra.generators())
            .cloned();
        Self::new(
            self.p,
            self.vars.clone(),
            self.table.clone(),
            Some(MonomialIdeal::new(gens)),
        )
    }

    pub fn prime(&self) -> PrimeChar {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Nonzero table entries `{x_i, x_j}` with `i < j`.
    pub fn table(&self) -> &BTreeMap<(usize, usize), Poly> {
        &self.table
    }

    /// `{x_i, x_j}` for any pair of generators.
    pub fn generator_bracket(&self, i: usize, j: usize) -> Poly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.zero(),
            std::cmp::Ordering::Less => self
                .table
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| self.zero()),
            std::cmp::Ordering::Greater => self
                .table
                .get(&(j, i))
                .map(|f| -f)
                .unwrap_or_else(|| self.zero()),
        }
    }

    pub fn quotient(&self) -> &MonomialIdeal {
        &self.quotient
    }

    pub fn has_quotient(&self) -> bool {
        !self.quotient.is_zero()
    }

    /// Standard monomials when the quotient is finite-dimensional.
    pub fn finite_basis(&self) -> Option<&[Monomial]> {
        self.basis.as_deref()
    }

    /// Whether every table entry is a constant.
    pub fn is_constant_table(&self) -> bool {
        self.table.values().all(Poly::is_constant)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.p)
    }

    pub fn one(&self) -> Poly {
        self.reduce(&Poly::one(self.p))
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        self.reduce(&Poly::constant(self.p, c))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.reduce(&Poly::var(self.p, i))
    }

    pub fn monomial(&self, m: &Monomial) -> Poly {
        self.reduce(&Poly::term(self.p, m.clone(), Scalar::ONE))
    }

    /// The monomial as a polynomial, without reduction.
    pub fn monomial_unreduced(&self, m: &Monomial) -> Poly {
        Poly::term(self.p, m.clone(), Scalar::ONE)
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        self.quotient.reduce(f)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        self.reduce(&(f * g))
    }

    pub fn pow(&self, f: &Poly, e: u64) -> Poly {
        if !self.has_quotient() {
            return f.pow(e);
        }
        let mut acc = self.one();
        let mut base = f.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `f^p`.
    pub fn frobenius(&self, f: &Poly) -> Poly {
        self.reduce(&f.frobenius())
    }

    /// Renders an element with this algebra's variable names.
    pub fn show(&self, f: &Poly) -> String {
        f.display(&self.vars).to_string()
    }

    /// Parses an element over this algebra's variables and reduces it.
    pub fn parse(&self, s: &str) -> Result<Poly> {
        Ok(self.reduce(&Poly::parse(self.p, &self.vars, s)?))
    }

    /// Checks that `f` is an element of this algebra.
    pub fn check_element(&self, f: &Poly) -> Result<()> {
        if f.prime() != self.p {
            return Err(Error::CharMismatch(self.p.get(), f.prime().get()));
        }
        if f.support_len() > self.nvars() {
            return Err(Error::ForeignElement(format!("{f:?}")));
        }
        Ok(())
    }

    fn bracket_unreduced(&self, f: &Poly, g: &Poly) -> Poly {
        let mut acc = self.zero();
        if f.is_zero() || g.is_zero() || self.table.is_empty() {
            return acc;
        }
        let n = self.nvars();
        let df: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|i| g.partial(i)).collect();
        for (&(i, j), c) in &self.table {
            let mut inner = self.zero();
            if !df[i].is_zero() && !dg[j].is_zero() {
                inner = inner + &df[i] * &dg[j];
            }
            if !df[j].is_zero() && !dg[i].is_zero() {
                inner = inner - &df[j] * &dg[i];
            }
            if !inner.is_zero() {
                acc = acc + c * &inner;
            }
        }
        acc
    }

    /// `{f, g}` via the biderivation formula
    /// `sum_{i<j} {x_i, x_j} (df/dx_i dg/dx_j - df/dx_j dg/dx_i)`.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        self.reduce(&self.bracket_unreduced(f, g))
    }

    /// [`Self::bracket`] with both arguments checked for membership.
    pub fn try_bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check_element(f)?;
        self.check_element(g)?;
        Ok(self.bracket(f, g))
    }

    /// Right-nested bracket `{a_1, {a_2, ..., {a_{n-1}, a_n}}}`.
    pub fn nested_bracket(&self, args: &[Poly]) -> Result<Poly> {
        if args.len() < 2 {
            return Err(Error::TooFewArguments(args.len()));
        }
        let mut acc = args[args.len() - 1].clone();
        for a in args[..args.len() - 1].iter().rev() {
            acc = self.bracket(a, &acc);
        }
        Ok(acc)
    }

    /// `ad_x^k(y)`.
    pub fn ad_power(&self, x: &Poly, k: usize, y: &Poly) -> Poly {
        let mut acc = y.clone();
        for _ in 0..k {
            if acc.is_zero() {
                break;
            }
            acc = self.bracket(x, &acc);
        }
        acc
    }

    /// `{a, {b, c}} + {b, {c, a}} + {c, {a, b}}`.
    pub fn jacobiator(&self, a: &Poly, b: &Poly, c: &Poly) -> Poly {
        self.bracket(a, &self.bracket(b, c))
            + self.bracket(b, &self.bracket(c, a))
            + self.bracket(c, &self.bracket(a, b))
    }

    /// A random element: a sparse combination of basis monomials for finite
    /// quotients, otherwise a reduced degree-bounded random polynomial.
    pub fn sample(&self, s: &mut Sampler) -> Poly {
        match &self.basis {
            Some(basis) if !basis.is_empty() => {
                let n = 1 + s.index(4);
                let terms: Vec<_> = (0..n)
                    .map(|_| (s.choose(basis).clone(), s.nonzero_scalar()))
                    .collect();
                Poly::from_terms(self.p, terms)
            }
            Some(_) => self.zero(),
            None => self.reduce(&s.poly(self.nvars())),
        }
    }

    /// Monomials used by exhaustive checks: the finite basis when there is
    /// one, otherwise all nonzero monomials of degree at most `degree_bound`.
    pub fn check_basis(&self, degree_bound: u32) -> Vec<Poly> {
        let monomials = match &self.basis {
            Some(b) => b.clone(),
            None => Monomial::all_up_to(self.nvars(), degree_bound),
        };
        monomials
            .iter()
            .map(|m| self.monomial(m))
            .filter(|f| !f.is_zero())
            .collect()
    }
}

/// Parses a monomial such as `x^3` or `x*y`.
pub fn parse_monomial<S: AsRef<str>>(p: PrimeChar, names: &[S], s: &str) -> Result<Monomial> {
    let f = Poly::parse(p, names, s)?;
    match f.terms() {
        [(m, c)] if *c == Scalar::ONE => Ok(m.clone()),
        _ => Err(Error::Parse {
            offset: 0,
            message: format!("{s:?} is not a monomial"),
        }),
    }
}

/// Antisymmetry, Jacobi and Leibniz on random elements, Jacobi exhaustively on
/// generators (and on basis triples for finite quotients), and
/// well-definedness of the bracket on the quotient.
pub fn verify_poisson(alg: &PoissonAlgebra, cfg: &SuiteConfig) -> Report {
    let mut report = Report::for_config("poisson", cfg);
    let mut s = Sampler::new(alg.prime(), cfg.seed);
    let show = |f: &Poly| alg.show(f);

    let mut anti = Check::new("antisymmetry");
    let mut jac = Check::new("jacobi");
    let mut leib = Check::new("leibniz");
    for _ in 0..cfg.samples {
        let (f, g, h) = (alg.sample(&mut s), alg.sample(&mut s), alg.sample(&mut s));
        let fg = alg.bracket(&f, &g);
        let gf = alg.bracket(&g, &f);
        anti.record_eq(
            (&fg + &gf).is_zero(),
            || vec![("f", show(&f)), ("g", show(&g))],
            || show(&fg),
            || show(&-&gf),
        );
        let r = alg.jacobiator(&f, &g, &h);
        jac.record_eq(
            r.is_zero(),
            || vec![("f", show(&f)), ("g", show(&g)), ("h", show(&h))],
            || show(&r),
            || "0".into(),
        );
        let lhs = alg.bracket(&alg.mul(&f, &g), &h);
        let rhs = alg.mul(&f, &alg.bracket(&g, &h)) + alg.mul(&g, &alg.bracket(&f, &h));
        leib.record_eq(
            lhs == rhs,
            || vec![("f", show(&f)), ("g", show(&g)), ("h", show(&h))],
            || show(&lhs),
            || show(&rhs),
        );
    }

    let mut jac_gen = Check::new("jacobi-generators");
    let x: Vec<Poly> = (0..alg.nvars()).map(|i| alg.var(i)).collect();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            for k in j + 1..x.len() {
                let r = alg.jacobiator(&x[i], &x[j], &x[k]);
                jac_gen.record_eq(
                    r.is_zero(),
                    || {
                        vec![
                            ("a", alg.vars[i].clone()),
                            ("b", alg.vars[j].clone()),
                            ("c", alg.vars[k].clone()),
                        ]
                    },
                    || show(&r),
                    || "0".into(),
                );
            }
        }
    }

    report.push(anti);
    report.push(jac_gen);
    report.push(jac);
    report.push(leib);

    if let Some(basis) = alg.finite_basis() {
        let b: Vec<Poly> = basis.iter().map(|m| alg.monomial(m)).collect();
        let mut jb = Check::new("jacobi-basis");
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                for k in j + 1..b.len() {
                    let r = alg.jacobiator(&b[i], &b[j], &b[k]);
                    jb.record_eq(
                        r.is_zero(),
                        || vec![("a", show(&b[i])), ("b", show(&b[j])), ("c", show(&b[k]))],
                        || show(&r),
                        || "0".into(),
                    );
                }
            }
        }
        report.push(jb);
    }

    if alg.has_quotient() {
        let mut wd = Check::new("quotient-well-defined");
        let gens = alg.quotient().generators();
        for _ in 0..cfg.samples {
            let lift = |s: &mut Sampler| {
                let f = s.poly(alg.nvars());
                let m = s.choose(gens).clone();
                let extra = s.poly(alg.nvars()).mul_term(&m, Scalar::ONE);
                f + extra
            };
            let (f, g) = (lift(&mut s), lift(&mut s));
            let lhs = alg.bracket(&f, &g);
            let rhs = alg.bracket(&alg.reduce(&f), &alg.reduce(&g));
            wd.record_eq(
                lhs == rhs,
                || vec![("f", show(&f)), ("g", show(&g))],
                || show(&lhs),
                || show(&rhs),
            );
        }
        report.push(wd);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    fn classical(p: u32) -> PoissonAlgebra {
        PoissonAlgebra::from_strings(k(p), &["x", "y"], &[("x", "y", "1")], &[]).unwrap()
    }

    fn trivial_extension(p: u32) -> PoissonAlgebra {
        PoissonAlgebra::from_strings(
            k(p),
            &["x", "y"],
            &[("x", "y", "x")],
            &["x^2", "x*y", "y^2"],
        )
        .unwrap()
    }

    #[test]
    fn classical_bracket_values() {
        let a = classical(3);
        let e = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.bracket(&e("x"), &e("y")), e("1"));
        assert_eq!(a.bracket(&e("x^2"), &e("y")), e("2x"));
        let f = e("x^2 y + 2 y^2 + x");
        assert!(a.bracket(&f, &f).is_zero());
        // {f, g} = f_x g_y - f_y g_x
        let g = e("x y^2 + y");
        let want = f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0);
        assert_eq!(a.bracket(&f, &g), want);
    }

    #[test]
    fn nested_brackets() {
        let a = classical(3);
        let e = |s: &str| a.parse(s).unwrap();
        assert!(a
            .nested_bracket(&[e("x"), e("y"), e("x")])
            .unwrap()
            .is_zero());
        assert_eq!(
            a.nested_bracket(&[e("x")]).unwrap_err(),
            Error::TooFewArguments(1)
        );
        let t = trivial_extension(3);
        let e = |s: &str| t.parse(s).unwrap();
        assert_eq!(t.nested_bracket(&[e("y"), e("y"), e("x")]).unwrap(), e("x"));
        assert_eq!(
            t.nested_bracket(&[e("x"), e("y")]).unwrap(),
            t.bracket(&e("x"), &e("y"))
        );
    }

    #[test]
    fn ad_powers() {
        let a = classical(3);
        let e = |s: &str| a.parse(s).unwrap();
        assert_eq!(a.ad_power(&e("x"), 1, &e("y")), e("1"));
        assert!(a.ad_power(&e("x"), 3, &e("y^3")).is_zero());
        assert_eq!(a.ad_power(&e("x"), 0, &e("y")), e("y"));
        assert_eq!(a.ad_power(&e("x"), 2, &e("y^3")), e("6 y"));
    }

    #[test]
    fn classical_and_trivial_extension_verify() {
        let cfg = SuiteConfig::new(16, 1);
        assert!(verify_poisson(&classical(3), &cfg).passed());
        let r = verify_poisson(&trivial_extension(5), &cfg);
        assert!(r.passed(), "{r}");
        assert!(r.check("quotient-well-defined").is_some());
        assert!(r.check("jacobi-basis").is_some());
    }

    #[test]
    fn corrupted_table_is_rejected_and_witnessed() {
        let table = [("x", "y", "x"), ("y", "z", "y"), ("x", "z", "0")];
        let err = PoissonAlgebra::from_strings(k(3), &["x", "y", "z"], &table, &[]).unwrap_err();
        // {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = {x,y} + 0 + {z,x} = x
        assert!(matches!(err, Error::JacobiViolation { ref residual, .. } if residual == "x"));

        let p = k(3);
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let entries = table.iter().map(|(u, v, f)| {
            let i = names.iter().position(|n| n == u).unwrap();
            let j = names.iter().position(|n| n == v).unwrap();
            ((i, j), Poly::parse(p, &names, f).unwrap())
        });
        let bad = PoissonAlgebra::new_unchecked(p, names.clone(), entries, None).unwrap();
        let r = verify_poisson(&bad, &SuiteConfig::new(4, 0));
        let c = r.check("jacobi-generators").unwrap();
        assert!(!c.passed());
        assert_eq!(c.witness.as_ref().unwrap().lhs, "x");
    }

    #[test]
    fn ideal_must_be_closed() {
        let err = PoissonAlgebra::from_strings(k(3), &["x", "y"], &[("x", "y", "1")], &["x"])
            .unwrap_err();
        assert!(matches!(err, Error::NotPoissonClosed { .. }));
        assert!(PoissonAlgebra::from_strings(
            k(3),
            &["x", "y"],
            &[("x", "y", "1")],
            &["x^3", "y^3"]
        )
        .is_ok());
    }

    #[test]
    fn table_shape_errors() {
        assert!(matches!(
            PoissonAlgebra::from_strings(k(3), &["x", "x"], &[], &[]),
            Err(Error::NameCollision(_))
        ));
        assert!(matches!(
            PoissonAlgebra::from_strings(k(3), &["x", "y"], &[("x", "x", "1")], &[]),
            Err(Error::InvalidTable(_))
        ));
        let a = classical(3);
        let foreign = Poly::var(k(3), 5);
        assert!(a.try_bracket(&foreign, &a.var(0)).is_err());
        let other = Poly::var(k(5), 0);
        assert_eq!(
            a.try_bracket(&other, &a.var(0)).unwrap_err(),
            Error::CharMismatch(3, 5)
        );
    }
}
