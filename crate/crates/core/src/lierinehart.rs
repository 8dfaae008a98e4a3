//! Kähler differentials of a polynomial Poisson algebra as a restricted
//! Lie-Rinehart algebra.
//!
//! Forms are `Σ a_i dx_i`. The bracket is determined by
//! `[x du, y dv] = x{u, y} dv + y{x, v} du + xy d{u, v}`, the anchor by
//! `α(x du)(z) = x{u, z}`, and the p-map on a pure form by
//! `(x du)^{[p]} = x^p d(pp(u)) + D^{p-1}(x) du` with `D = α(x du)`. Sums of
//! pure forms are handled with the additivity rule.

use crate::algebra::{Poly, PrimeChar, Sampler, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::report::{Check, Report, SuiteConfig};
use crate::restricted::{lambda_p, LieBracket, RestrictedPoissonAlgebra};

/// `Σ a_i dx_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KahlerForm {
    coeffs: Vec<Poly>,
}

impl KahlerForm {
    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

/// The Lie-Rinehart pair `(A, Ω_A)` of a restricted Poisson polynomial algebra.
#[derive(Clone, Debug)]
pub struct LieRinehart {
    a: RestrictedPoissonAlgebra,
    correction: bool,
}

impl LieRinehart {
    /// Requires a polynomial algebra (no quotient), so that `Ω_A` is free on the `dx_i`.
    pub fn new(a: RestrictedPoissonAlgebra) -> Result<Self> {
        if a.base().has_quotient() {
            return Err(Error::Unsupported(
                "Kähler forms of quotient algebras".into(),
            ));
        }
        Ok(LieRinehart {
            a,
            correction: true,
        })
    }

    /// The same structure with the p-map of a pure form replaced by
    /// `x^p d(pp(u))`, dropping `D^{p-1}(x) du`. Not restricted in general.
    pub fn without_correction(mut self) -> Self {
        self.correction = false;
        self
    }

    pub fn algebra(&self) -> &RestrictedPoissonAlgebra {
        &self.a
    }

    fn alg(&self) -> &PoissonAlgebra {
        self.a.base()
    }

    pub fn zero_form(&self) -> KahlerForm {
        KahlerForm {
            coeffs: vec![self.alg().zero(); self.alg().nvars()],
        }
    }

    /// `f dx_i`.
    pub fn pure(&self, f: &Poly, i: usize) -> KahlerForm {
        let mut w = self.zero_form();
        w.coeffs[i] = f.clone();
        w
    }

    pub fn from_coeffs(&self, coeffs: Vec<Poly>) -> Result<KahlerForm> {
        if coeffs.len() != self.alg().nvars() {
            return Err(Error::ForeignElement(format!(
                "form with {} coefficients over {} generators",
                coeffs.len(),
                self.alg().nvars()
            )));
        }
        for c in &coeffs {
            self.alg().check_element(c)?;
        }
        Ok(KahlerForm { coeffs })
    }

    /// `df = Σ (∂f/∂x_i) dx_i`.
    pub fn differential(&self, f: &Poly) -> KahlerForm {
        KahlerForm {
            coeffs: (0..self.alg().nvars()).map(|i| f.partial(i)).collect(),
        }
    }

    pub fn add(&self, a: &KahlerForm, b: &KahlerForm) -> KahlerForm {
        KahlerForm {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    /// `f ω`.
    pub fn mul(&self, f: &Poly, w: &KahlerForm) -> KahlerForm {
        KahlerForm {
            coeffs: w.coeffs.iter().map(|c| f * c).collect(),
        }
    }

    pub fn scale(&self, w: &KahlerForm, c: Scalar) -> KahlerForm {
        KahlerForm {
            coeffs: w.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// The bracket of forms.
    pub fn bracket(&self, w: &KahlerForm, v: &KahlerForm) -> KahlerForm {
        let alg = self.alg();
        let n = alg.nvars();
        let mut out = self.zero_form();
        for (i, a) in w.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let xi = alg.var(i);
            for (j, b) in v.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let xj = alg.var(j);
                // a{x_i, b} dx_j + b{a, x_j} dx_i + ab d{x_i, x_j}
                out.coeffs[j] = &out.coeffs[j] + &(a * &alg.bracket(&xi, b));
                out.coeffs[i] = &out.coeffs[i] + &(b * &alg.bracket(a, &xj));
                let c = alg.generator_bracket(i, j);
                if !c.is_constant() {
                    let ab = a * b;
                    for k in 0..n {
                        let dk = c.partial(k);
                        if !dk.is_zero() {
                            out.coeffs[k] = &out.coeffs[k] + &(&ab * &dk);
                        }
                    }
                }
            }
        }
        out
    }

    /// `α(ω)(z) = Σ a_i {x_i, z}`.
    pub fn anchor_apply(&self, w: &KahlerForm, z: &Poly) -> Poly {
        let alg = self.alg();
        w.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .fold(alg.zero(), |acc, (i, a)| {
                acc + a * &alg.bracket(&alg.var(i), z)
            })
    }

    /// `α(ω)^k(z)`.
    pub fn anchor_power(&self, w: &KahlerForm, k: usize, z: &Poly) -> Poly {
        let mut acc = z.clone();
        for _ in 0..k {
            if acc.is_zero() {
                break;
            }
            acc = self.anchor_apply(w, &acc);
        }
        acc
    }

    /// The p-map on `x du` for arbitrary `x` and `u`.
    pub fn pure_pmap(&self, x: &Poly, u: &Poly) -> KahlerForm {
        let alg = self.alg();
        let p = alg.prime().get() as usize;
        let du = self.differential(u);
        let head = self.mul(&alg.frobenius(x), &self.differential(&self.a.pp(u)));
        if !self.correction {
            return head;
        }
        let d = self.mul(x, &du);
        let tail = self.anchor_power(&d, p - 1, x);
        self.add(&head, &self.mul(&tail, &du))
    }

    /// `ω^{[p]}`, folding over the pure terms `a_i dx_i` in generator order.
    pub fn form_pmap(&self, w: &KahlerForm) -> KahlerForm {
        let alg = self.alg();
        let mut acc = self.zero_form();
        let mut acc_pp = self.zero_form();
        for (i, a) in w.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = self.pure(a, i);
            let value = self.pure_pmap(a, &alg.var(i));
            acc_pp = self.add(&self.add(&acc_pp, &value), &lambda_p(self, &acc, &term));
            acc = self.add(&acc, &term);
        }
        acc_pp
    }

    pub fn show(&self, w: &KahlerForm) -> String {
        let alg = self.alg();
        let parts: Vec<String> = w
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| {
                let name = &alg.vars()[i];
                if a.len() == 1 && a.is_constant() {
                    let c = a.constant_term();
                    if c == Scalar::ONE {
                        format!("d{name}")
                    } else {
                        format!("{c}*d{name}")
                    }
                } else if a.len() == 1 {
                    format!("{}*d{name}", alg.show(a))
                } else {
                    format!("({})*d{name}", alg.show(a))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// A random form with small coefficients.
    pub fn sample_form(&self, s: &mut Sampler) -> KahlerForm {
        let n = self.alg().nvars();
        KahlerForm {
            coeffs: (0..n).map(|_| s.poly_with(n, 2, 2)).collect(),
        }
    }

    fn sample_small(&self, s: &mut Sampler) -> Poly {
        s.poly_with(self.alg().nvars(), 2, 3)
    }
}

impl LieBracket for LieRinehart {
    type Elem = KahlerForm;

    fn prime(&self) -> PrimeChar {
        self.alg().prime()
    }

    fn bracket(&self, a: &KahlerForm, b: &KahlerForm) -> KahlerForm {
        LieRinehart::bracket(self, a, b)
    }

    fn add(&self, a: &KahlerForm, b: &KahlerForm) -> KahlerForm {
        LieRinehart::add(self, a, b)
    }

    fn scale(&self, a: &KahlerForm, c: Scalar) -> KahlerForm {
        LieRinehart::scale(self, a, c)
    }

    fn zero(&self) -> KahlerForm {
        self.zero_form()
    }

    fn is_zero(&self, a: &KahlerForm) -> bool {
        a.is_zero()
    }
}

/// The restricted Lie-Rinehart axioms on random inputs:
///
/// * antisymmetry and Jacobi for the form bracket;
/// * `[X, aY] = a[X, Y] + α(X)(a) Y` and `α(aX) = a α(X)`;
/// * `α([X, Y]) = [α(X), α(Y)]` as operators;
/// * `α(X^{[p]}) = α(X)^p` and `ad_X^p = ad_{X^{[p]}}`;
/// * additivity of the p-map with Jacobson's `Λ_p`;
/// * `(aX)^{[p]} = a^p X^{[p]} + α(aX)^{p-1}(a) X`;
/// * the pure-form formula for `x du` with arbitrary `u`, and the operator
///   identity `α(x du)^p = α(x^p d(pp(u))) + α(D^{p-1}(x) du)`.
pub fn verify_lie_rinehart(lr: &LieRinehart, cfg: &SuiteConfig) -> Report {
    let mut report = Report::for_config("lie-rinehart", cfg);
    let alg = lr.alg();
    let p = alg.prime().get() as usize;
    let mut s = Sampler::new(alg.prime(), cfg.seed);
    let sf = |w: &KahlerForm| lr.show(w);
    let sp = |f: &Poly| alg.show(f);

    let mut antisym = Check::new("antisymmetry");
    let mut jacobi = Check::new("jacobi");
    let mut leibniz = Check::new("anchor-leibniz");
    let mut linear = Check::new("anchor-linear");
    let mut hom = Check::new("anchor-bracket");
    let mut restricted = Check::new("anchor-restricted");
    let mut ad = Check::new("ad-power");
    let mut additivity = Check::new("additivity");
    let mut scalar = Check::new("scalar-multiple");
    let mut pure = Check::new("pure-form");
    let mut hochschild = Check::new("pure-anchor-power");

    for _ in 0..cfg.samples {
        let (x, y, w) = (
            lr.sample_form(&mut s),
            lr.sample_form(&mut s),
            lr.sample_form(&mut s),
        );
        let a = lr.sample_small(&mut s);
        let z = lr.sample_small(&mut s);

        let xy = lr.bracket(&x, &y);
        let yx = lr.bracket(&y, &x);
        let sum = lr.add(&xy, &yx);
        antisym.record_eq(
            sum.is_zero(),
            || vec![("X", sf(&x)), ("Y", sf(&y))],
            || sf(&sum),
            || "0".into(),
        );

        let jac = lr.add(
            &lr.add(
                &lr.bracket(&x, &lr.bracket(&y, &w)),
                &lr.bracket(&y, &lr.bracket(&w, &x)),
            ),
            &lr.bracket(&w, &xy),
        );
        jacobi.record_eq(
            jac.is_zero(),
            || vec![("X", sf(&x)), ("Y", sf(&y)), ("Z", sf(&w))],
            || sf(&jac),
            || "0".into(),
        );

        let lhs = lr.bracket(&x, &lr.mul(&a, &y));
        let rhs = lr.add(&lr.mul(&a, &xy), &lr.mul(&lr.anchor_apply(&x, &a), &y));
        leibniz.record_eq(
            lhs == rhs,
            || vec![("X", sf(&x)), ("a", sp(&a)), ("Y", sf(&y))],
            || sf(&lhs),
            || sf(&rhs),
        );

        let lhs = lr.anchor_apply(&lr.mul(&a, &x), &z);
        let rhs = &a * &lr.anchor_apply(&x, &z);
        linear.record_eq(
            lhs == rhs,
            || vec![("a", sp(&a)), ("X", sf(&x)), ("z", sp(&z))],
            || sp(&lhs),
            || sp(&rhs),
        );

        let lhs = lr.anchor_apply(&xy, &z);
        let rhs = lr.anchor_apply(&x, &lr.anchor_apply(&y, &z))
            - lr.anchor_apply(&y, &lr.anchor_apply(&x, &z));
        hom.record_eq(
            lhs == rhs,
            || vec![("X", sf(&x)), ("Y", sf(&y)), ("z", sp(&z))],
            || sp(&lhs),
            || sp(&rhs),
        );

        let xp = lr.form_pmap(&x);
        let lhs = lr.anchor_apply(&xp, &z);
        let rhs = lr.anchor_power(&x, p, &z);
        restricted.record_eq(
            lhs == rhs,
            || vec![("X", sf(&x)), ("z", sp(&z))],
            || sp(&lhs),
            || sp(&rhs),
        );

        let lhs = lr.ad_pow(&x, p, &y);
        let rhs = lr.bracket(&xp, &y);
        ad.record_eq(
            lhs == rhs,
            || vec![("X", sf(&x)), ("Y", sf(&y))],
            || sf(&lhs),
            || sf(&rhs),
        );

        let lhs = lr.form_pmap(&lr.add(&x, &y));
        let rhs = lr.add(&lr.add(&xp, &lr.form_pmap(&y)), &lambda_p(lr, &x, &y));
        additivity.record_eq(
            lhs == rhs,
            || vec![("X", sf(&x)), ("Y", sf(&y))],
            || sf(&lhs),
            || sf(&rhs),
        );

        let ax = lr.mul(&a, &x);
        let lhs = lr.form_pmap(&ax);
        let tail = lr.anchor_power(&ax, p - 1, &a);
        let rhs = lr.add(&lr.mul(&alg.frobenius(&a), &xp), &lr.mul(&tail, &x));
        scalar.record_eq(
            lhs == rhs,
            || vec![("a", sp(&a)), ("X", sf(&x))],
            || sf(&lhs),
            || sf(&rhs),
        );

        // a pure form x du with u arbitrary, written out in the basis dx_i
        let u = lr.sample_small(&mut s);
        let xdu = lr.mul(&a, &lr.differential(&u));
        let lhs = lr.form_pmap(&xdu);
        let rhs = lr.pure_pmap(&a, &u);
        pure.record_eq(
            lhs == rhs,
            || vec![("x", sp(&a)), ("u", sp(&u))],
            || sf(&lhs),
            || sf(&rhs),
        );

        let lhs = lr.anchor_power(&xdu, p, &z);
        let rhs = lr.anchor_apply(&rhs, &z);
        hochschild.record_eq(
            lhs == rhs,
            || vec![("x", sp(&a)), ("u", sp(&u)), ("z", sp(&z))],
            || sp(&lhs),
            || sp(&rhs),
        );
    }
    for c in [
        antisym, jacobi, leibniz, linear, hom, restricted, ad, additivity, scalar, pure, hochschild,
    ] {
        report.push(c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted::JacobsonCheck;
    use std::sync::Arc;

    fn classical3() -> LieRinehart {
        let alg = Arc::new(
            PoissonAlgebra::from_strings(
                PrimeChar::new(3).unwrap(),
                &["x", "y"],
                &[("x", "y", "1")],
                &[],
            )
            .unwrap(),
        );
        let z = alg.zero();
        let a =
            RestrictedPoissonAlgebra::from_generators(alg, vec![z.clone(), z], JacobsonCheck::Off)
                .unwrap();
        LieRinehart::new(a).unwrap()
    }

    #[test]
    fn differentials() {
        let lr = classical3();
        let e = |s: &str| lr.algebra().base().parse(s).unwrap();
        assert_eq!(lr.show(&lr.differential(&e("x y"))), "y*dx + x*dy");
        assert!(lr.differential(&e("x^3")).is_zero());
        assert!(lr.differential(&e("2")).is_zero());
    }

    #[test]
    fn brackets_and_anchor() {
        let lr = classical3();
        let e = |s: &str| lr.algebra().base().parse(s).unwrap();
        let (dx, dy) = (lr.differential(&e("x")), lr.differential(&e("y")));
        assert!(lr.bracket(&dx, &dy).is_zero());
        assert!(lr.bracket(&lr.mul(&e("x"), &dx), &dx).is_zero());
        let g = e("x y^2 + y");
        assert_eq!(lr.anchor_apply(&dx, &g), g.partial(1));
        assert!(lr.anchor_apply(&dx, &e("2")).is_zero());
    }

    #[test]
    fn pmap_values() {
        let lr = classical3();
        let e = |s: &str| lr.algebra().base().parse(s).unwrap();
        assert!(lr.form_pmap(&lr.differential(&e("x"))).is_zero());
        assert!(lr.form_pmap(&lr.pure(&e("x"), 0)).is_zero());
        // D = α(y dx) = y ∂_y and D^2(y) = y
        assert_eq!(lr.form_pmap(&lr.pure(&e("y"), 0)), lr.pure(&e("y"), 0));
        let dropped = lr.clone().without_correction();
        assert!(dropped.form_pmap(&lr.pure(&e("y"), 0)).is_zero());
    }

    #[test]
    fn suite_passes_and_control_fails() {
        let lr = classical3();
        let cfg = SuiteConfig::new(16, 0);
        let r = verify_lie_rinehart(&lr, &cfg);
        assert!(r.passed(), "{r}");
        let bad = verify_lie_rinehart(&lr.without_correction(), &cfg);
        assert!(!bad.check("scalar-multiple").unwrap().passed());
    }
}
