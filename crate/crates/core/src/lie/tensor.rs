//! Tensor products of restricted Poisson algebras.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{Monomial, MonomialIdeal, Poly, Sampler};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::report::{Check, Report, SuiteConfig};
use crate::restricted::{fold_pmap, PMapEval, RestrictedPoissonAlgebra};

/// `A ⊗ B` on the disjoint union of the generators, with the embeddings of
/// both factors.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    left: RestrictedPoissonAlgebra,
    right: RestrictedPoissonAlgebra,
    product: RestrictedPoissonAlgebra,
}

/// On a monomial `a b` with `a` in the left and `b` in the right factor:
/// `pp(a ⊗ b) = pp(a) ⊗ b^p + a^p ⊗ pp(b)`.
struct TensorPMap {
    alg: Arc<PoissonAlgebra>,
    left: RestrictedPoissonAlgebra,
    right: RestrictedPoissonAlgebra,
    split: usize,
    cache: Mutex<HashMap<Monomial, Poly>>,
}

impl TensorPMap {
    fn monomial_value(&self, m: &Monomial) -> Poly {
        if let Some(v) = self.cache.lock().expect("cache poisoned").get(m) {
            return v.clone();
        }
        let (ma, mb) = m.split(self.split);
        let a = self.left.base().monomial(&ma);
        let b = self.right.base().monomial(&mb);
        let pa = self.left.pp(&a);
        let pb = self.right.pp(&b).shift(self.split);
        let a_p = a.frobenius();
        let b_p = b.frobenius().shift(self.split);
        let value = self.alg.mul(&pa, &b_p) + self.alg.mul(&a_p, &pb);
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(m.clone(), value.clone());
        value
    }
}

impl PMapEval for TensorPMap {
    fn eval(&self, f: &Poly) -> Poly {
        fold_pmap(&self.alg, f, |m| self.monomial_value(m))
    }
}

fn fresh_name(taken: &[String], name: &str) -> String {
    let mut candidate = name.to_string();
    while taken.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

impl TensorProduct {
    /// Right-factor generators whose names clash with earlier ones get primes appended.
    pub fn new(left: &RestrictedPoissonAlgebra, right: &RestrictedPoissonAlgebra) -> Result<Self> {
        let (a, b) = (left.base(), right.base());
        if a.prime() != b.prime() {
            return Err(Error::CharMismatch(a.prime().get(), b.prime().get()));
        }
        let split = a.nvars();
        let mut vars = a.vars().to_vec();
        for v in b.vars() {
            let name = fresh_name(&vars, v);
            vars.push(name);
        }
        let table = a.table().iter().map(|(&k, v)| (k, v.clone())).chain(
            b.table()
                .iter()
                .map(|(&(i, j), v)| ((i + split, j + split), v.shift(split))),
        );
        let gens = a
            .quotient()
            .generators()
            .iter()
            .cloned()
            .chain(b.quotient().generators().iter().map(|m| m.shift(split)));
        let ideal = MonomialIdeal::new(gens);
        let ideal = if ideal.is_zero() { None } else { Some(ideal) };
        let alg = Arc::new(PoissonAlgebra::new(a.prime(), vars, table, ideal)?);
        let pm = TensorPMap {
            alg: alg.clone(),
            left: left.clone(),
            right: right.clone(),
            split,
            cache: Mutex::new(HashMap::new()),
        };
        Ok(TensorProduct {
            left: left.clone(),
            right: right.clone(),
            product: RestrictedPoissonAlgebra::new(alg, Arc::new(pm)),
        })
    }

    pub fn product(&self) -> &RestrictedPoissonAlgebra {
        &self.product
    }

    pub fn left(&self) -> &RestrictedPoissonAlgebra {
        &self.left
    }

    pub fn right(&self) -> &RestrictedPoissonAlgebra {
        &self.right
    }

    /// Number of generators coming from the left factor.
    pub fn split(&self) -> usize {
        self.left.base().nvars()
    }

    /// `a ↦ a ⊗ 1`.
    pub fn embed_left(&self, a: &Poly) -> Poly {
        a.clone()
    }

    /// `b ↦ 1 ⊗ b`.
    pub fn embed_right(&self, b: &Poly) -> Poly {
        b.shift(self.split())
    }
}

/// `pp(a ⊗ b) = pp(a) ⊗ b^p + a^p ⊗ pp(b)` on generators and random pairs, and
/// the unit cases `pp(a ⊗ 1) = pp(a) ⊗ 1`, `pp(1 ⊗ b) = 1 ⊗ pp(b)`.
pub fn verify_tensor(t: &TensorProduct, cfg: &SuiteConfig) -> Report {
    let mut report = Report::for_config("tensor", cfg);
    let (a, b) = (t.left(), t.right());
    let prod = t.product();
    let alg = prod.base();
    let mut s = Sampler::new(alg.prime(), cfg.seed);

    let mut lefts: Vec<Poly> = (0..a.base().nvars()).map(|i| a.base().var(i)).collect();
    let mut rights: Vec<Poly> = (0..b.base().nvars()).map(|i| b.base().var(i)).collect();
    for _ in 0..cfg.samples {
        lefts.push(a.base().sample(&mut s));
        rights.push(b.base().sample(&mut s));
    }

    let mut left_unit = Check::new("left-unit");
    for x in &lefts {
        let lhs = prod.pp(&t.embed_left(x));
        let rhs = t.embed_left(&a.pp(x));
        left_unit.record_eq(
            lhs == rhs,
            || vec![("a", a.base().show(x))],
            || alg.show(&lhs),
            || alg.show(&rhs),
        );
    }
    report.push(left_unit);

    let mut right_unit = Check::new("right-unit");
    for y in &rights {
        let lhs = prod.pp(&t.embed_right(y));
        let rhs = t.embed_right(&b.pp(y));
        right_unit.record_eq(
            lhs == rhs,
            || vec![("b", b.base().show(y))],
            || alg.show(&lhs),
            || alg.show(&rhs),
        );
    }
    report.push(right_unit);

    let mut mixed = Check::new("mixed-product");
    for (x, y) in lefts.iter().zip(&rights) {
        let (ex, ey) = (t.embed_left(x), t.embed_right(y));
        let lhs = prod.pp(&alg.mul(&ex, &ey));
        let rhs = alg.mul(&t.embed_left(&a.pp(x)), &alg.frobenius(&ey))
            + alg.mul(&alg.frobenius(&ex), &t.embed_right(&b.pp(y)));
        mixed.record_eq(
            lhs == rhs,
            || vec![("a", a.base().show(x)), ("b", b.base().show(y))],
            || alg.show(&lhs),
            || alg.show(&rhs),
        );
    }
    report.push(mixed);
    report
}
