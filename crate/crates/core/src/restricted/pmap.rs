//! p-maps: the inductive construction on monomials and the extension to all
//! elements by the additivity rule.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::jacobson::{lambda_p, phi_p};
use crate::algebra::{Monomial, Poly, Sampler, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;

/// Something that evaluates a p-map on elements of a fixed algebra.
pub trait PMapEval: Send + Sync {
    fn eval(&self, f: &Poly) -> Poly;
}

/// Extends values on monomials to arbitrary elements by folding over the
/// terms in the given order:
/// `pp(g + c m) = pp(g) + c^p pp(m) + Λ_p(g, c m)`.
pub fn fold_terms(
    alg: &PoissonAlgebra,
    terms: &[(Monomial, Scalar)],
    mut monomial_value: impl FnMut(&Monomial) -> Poly,
) -> Poly {
    let p = alg.prime();
    let mut acc = alg.zero();
    let mut acc_pp = alg.zero();
    for (m, c) in terms {
        let t = alg.reduce(&Poly::term(p, m.clone(), *c));
        if t.is_zero() {
            continue;
        }
        let v = monomial_value(m).scale(p.pow(*c, p.get() as u64));
        acc_pp = acc_pp + v + lambda_p(alg, &acc, &t);
        acc = acc + t;
    }
    acc_pp
}

/// [`fold_terms`] over the terms of `f` in ascending graded-lex order.
pub fn fold_pmap(
    alg: &PoissonAlgebra,
    f: &Poly,
    monomial_value: impl FnMut(&Monomial) -> Poly,
) -> Poly {
    let f = alg.reduce(f);
    fold_terms(alg, f.terms(), monomial_value)
}

/// The p-map determined by its values `γ(x_i)` on generators.
///
/// On a monomial `x^I` with `k` the smallest index occurring and
/// `r = x^I / x_k`, the value is `x_k^p pp(r) + r^p γ(x_k) + Φ_p(x_k, r)`;
/// results are memoized per monomial.
pub struct PMap {
    alg: Arc<PoissonAlgebra>,
    gamma: Vec<Poly>,
    cache: Mutex<HashMap<Monomial, Poly>>,
}

impl fmt::Debug for PMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PMap").field("gamma", &self.gamma).finish()
    }
}

impl PMap {
    pub fn algebra(&self) -> &Arc<PoissonAlgebra> {
        &self.alg
    }

    pub fn gamma(&self) -> &[Poly] {
        &self.gamma
    }

    pub fn monomial_value(&self, m: &Monomial) -> Poly {
        let Some(k) = m.first_var() else {
            return self.alg.zero();
        };
        if let Some(v) = self.cache.lock().expect("cache poisoned").get(m) {
            return v.clone();
        }
        let alg = &*self.alg;
        let rest = m.lower(k, 1).expect("x_k divides m");
        let value = if rest.is_one() {
            self.gamma[k].clone()
        } else {
            let xk = alg.var(k);
            let r = alg.monomial(&rest);
            let rest_pp = self.monomial_value(&rest);
            alg.mul(&alg.frobenius(&xk), &rest_pp)
                + alg.mul(&alg.frobenius(&r), &self.gamma[k])
                + phi_p(alg, &xk, &r)
        };
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(m.clone(), value.clone());
        value
    }

    /// Folds over the terms of `f` in the given order; the result does not
    /// depend on the order for a genuine p-map.
    pub fn eval_in_order(&self, terms: &[(Monomial, Scalar)]) -> Poly {
        fold_terms(&self.alg, terms, |m| self.monomial_value(m))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().expect("cache poisoned").len()
    }
}

impl PMapEval for PMap {
    fn eval(&self, f: &Poly) -> Poly {
        fold_pmap(&self.alg, f, |m| self.monomial_value(m))
    }
}

/// How `build_pmap` confirms `ad_{x_i}^p = ad_{γ(x_i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobsonCheck {
    Off,
    /// Generators plus `samples` random elements per generator.
    Sampled {
        samples: usize,
        seed: u64,
    },
    /// Generators plus every monomial up to the degree bound (or the finite basis).
    Exact {
        degree_bound: u32,
    },
}

impl Default for JacobsonCheck {
    fn default() -> Self {
        JacobsonCheck::Sampled {
            samples: 32,
            seed: 0,
        }
    }
}

/// Builds the p-map with `pp(x_i) = gamma[i]`.
pub fn build_pmap(
    alg: Arc<PoissonAlgebra>,
    gamma: Vec<Poly>,
    check: JacobsonCheck,
) -> Result<PMap> {
    if gamma.len() < alg.nvars() {
        return Err(Error::MissingGenerator(alg.vars()[gamma.len()].clone()));
    }
    if gamma.len() > alg.nvars() {
        return Err(Error::ForeignElement(format!(
            "{} generator images for {} generators",
            gamma.len(),
            alg.nvars()
        )));
    }
    for g in &gamma {
        alg.check_element(g)?;
    }
    let gamma: Vec<Poly> = gamma.iter().map(|g| alg.reduce(g)).collect();
    let mut tests: Vec<Poly> = (0..alg.nvars()).map(|i| alg.var(i)).collect();
    match check {
        JacobsonCheck::Off => tests.clear(),
        JacobsonCheck::Sampled { samples, seed } => {
            let mut s = Sampler::new(alg.prime(), seed);
            tests.extend((0..samples).map(|_| alg.sample(&mut s)));
        }
        JacobsonCheck::Exact { degree_bound } => tests.extend(alg.check_basis(degree_bound)),
    }
    let p = alg.prime().get() as usize;
    for (i, g) in gamma.iter().enumerate() {
        let xi = alg.var(i);
        for t in &tests {
            let lhs = alg.ad_power(&xi, p, t);
            let rhs = alg.bracket(g, t);
            if lhs != rhs {
                return Err(Error::JacobsonFailure {
                    generator: alg.vars()[i].clone(),
                    element: alg.show(t),
                    lhs: alg.show(&lhs),
                    rhs: alg.show(&rhs),
                });
            }
        }
    }
    Ok(PMap {
        alg,
        gamma,
        cache: Mutex::new(HashMap::new()),
    })
}

/// A Poisson algebra together with a p-map.
#[derive(Clone)]
pub struct RestrictedPoissonAlgebra {
    base: Arc<PoissonAlgebra>,
    pmap: Arc<dyn PMapEval>,
}

impl fmt::Debug for RestrictedPoissonAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictedPoissonAlgebra")
            .field("base", &self.base)
            .finish()
    }
}

impl RestrictedPoissonAlgebra {
    /// Pairs an algebra with a p-map without verifying any axiom.
    pub fn new(base: Arc<PoissonAlgebra>, pmap: Arc<dyn PMapEval>) -> Self {
        RestrictedPoissonAlgebra { base, pmap }
    }

    /// The algebra with the p-map induced by generator images.
    pub fn from_generators(
        base: Arc<PoissonAlgebra>,
        gamma: Vec<Poly>,
        check: JacobsonCheck,
    ) -> Result<Self> {
        let pm = build_pmap(base.clone(), gamma, check)?;
        Ok(Self::new(base, Arc::new(pm)))
    }

    pub fn base(&self) -> &PoissonAlgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<PoissonAlgebra> {
        &self.base
    }

    pub fn pmap(&self) -> &Arc<dyn PMapEval> {
        &self.pmap
    }

    /// `pp(f)`.
    pub fn pp(&self, f: &Poly) -> Poly {
        self.base.reduce(&self.pmap.eval(&self.base.reduce(f)))
    }

    /// The same algebra with a different p-map.
    pub fn with_pmap(&self, pmap: Arc<dyn PMapEval>) -> Self {
        Self::new(self.base.clone(), pmap)
    }
}
