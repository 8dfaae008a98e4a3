//! Finite-dimensional restricted Lie algebras given by structure constants.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{MonomialIdeal, Poly, PrimeChar, Sampler, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::report::{Check, Report, SuiteConfig};
use crate::restricted::{
    lambda_p, quotient_restricted, JacobsonCheck, LieBracket, RestrictedPoissonAlgebra,
};

/// Coordinates with respect to the basis.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLieAlgebra {
    p: PrimeChar,
    basis: Vec<String>,
    /// `[x_i, x_j]` for `i < j`.
    structure: BTreeMap<(usize, usize), Vector>,
    /// `x_i^{[p]}`.
    pmap: Vec<Vector>,
}

impl RestrictedLieAlgebra {
    /// Builds and validates: Jacobi on basis triples and
    /// `ad_{x_i}^p = ad_{x_i^{[p]}}` on every basis element.
    pub fn new(
        p: PrimeChar,
        basis: Vec<String>,
        structure: impl IntoIterator<Item = ((usize, usize), Vector)>,
        pmap: Vec<Vector>,
    ) -> Result<Self> {
        let l = Self::new_unchecked(p, basis, structure, pmap)?;
        l.validate()?;
        Ok(l)
    }

    /// Checks only the shape of the data.
    pub fn new_unchecked(
        p: PrimeChar,
        basis: Vec<String>,
        structure: impl IntoIterator<Item = ((usize, usize), Vector)>,
        pmap: Vec<Vector>,
    ) -> Result<Self> {
        let n = basis.len();
        let shape = |v: &Vector| {
            if v.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidTable(format!(
                    "vector of length {} in dimension {n}",
                    v.len()
                )))
            }
        };
        let mut table = BTreeMap::new();
        for ((i, j), v) in structure {
            shape(&v)?;
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidTable(format!("structure index ({i}, {j})")));
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.iter().map(|c| p.neg(*c)).collect())
            };
            table.insert(key, v);
        }
        if pmap.len() != n {
            return Err(Error::MissingGenerator(
                basis.get(pmap.len()).cloned().unwrap_or_default(),
            ));
        }
        for v in &pmap {
            shape(v)?;
        }
        Ok(RestrictedLieAlgebra {
            p,
            basis,
            structure: table,
            pmap,
        })
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let e: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(&e[i], &e[j], &e[k]);
                    if !LieBracket::is_zero(self, &r) {
                        return Err(Error::JacobiViolation {
                            a: self.basis[i].clone(),
                            b: self.basis[j].clone(),
                            c: self.basis[k].clone(),
                            residual: self.show(&r),
                        });
                    }
                }
            }
        }
        let p = self.p.get() as usize;
        for i in 0..n {
            for ej in &e {
                let lhs = self.ad_pow(&e[i], p, ej);
                let rhs = self.bracket(&self.pmap[i], ej);
                if lhs != rhs {
                    return Err(Error::JacobsonFailure {
                        generator: self.basis[i].clone(),
                        element: self.show(ej),
                        lhs: self.show(&lhs),
                        rhs: self.show(&rhs),
                    });
                }
            }
        }
        Ok(())
    }

    /// `sl_2` with basis `e, h, f`, `[e,h] = -2e`, `[e,f] = h`, `[h,f] = -2f`,
    /// and `e^{[p]} = 0`, `h^{[p]} = h`, `f^{[p]} = 0`.
    pub fn sl2(p: PrimeChar) -> Self {
        let v = |a: i64, b: i64, c: i64| vec![p.scalar(a), p.scalar(b), p.scalar(c)];
        Self::new(
            p,
            ["e", "h", "f"].iter().map(|s| s.to_string()).collect(),
            [
                ((0, 1), v(-2, 0, 0)),
                ((0, 2), v(0, 1, 0)),
                ((1, 2), v(0, 0, -2)),
            ],
            vec![v(0, 0, 0), v(0, 1, 0), v(0, 0, 0)],
        )
        .expect("sl2 is restricted")
    }

    /// The two-dimensional algebra `[x, y] = x` with `x^{[p]} = 0`, `y^{[p]} = y`.
    pub fn solvable2(p: PrimeChar) -> Self {
        let v = |a: i64, b: i64| vec![p.scalar(a), p.scalar(b)];
        Self::new(
            p,
            vec!["x".into(), "y".into()],
            [((0, 1), v(1, 0))],
            vec![v(0, 0), v(0, 1)],
        )
        .expect("the solvable algebra is restricted")
    }

    /// The abelian algebra on the given names with zero p-map.
    pub fn abelian(p: PrimeChar, names: &[&str]) -> Self {
        let n = names.len();
        Self::new(
            p,
            names.iter().map(|s| s.to_string()).collect(),
            [],
            vec![vec![Scalar::ZERO; n]; n],
        )
        .expect("abelian algebras are restricted")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::ZERO; self.dim()];
        v[i] = Scalar::ONE;
        v
    }

    pub fn basis_pmap(&self, i: usize) -> &Vector {
        &self.pmap[i]
    }

    /// `[x_i, x_j]` for any `i, j`.
    pub fn structure(&self, i: usize, j: usize) -> Vector {
        let zero = vec![Scalar::ZERO; self.dim()];
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.structure.get(&(i, j)).cloned().unwrap_or(zero),
            std::cmp::Ordering::Greater => {
                self.scale(&self.structure(j, i), self.p.neg(Scalar::ONE))
            }
            std::cmp::Ordering::Equal => zero,
        }
    }

    /// The element as a linear polynomial in the basis names.
    pub fn to_poly(&self, v: &Vector) -> Poly {
        let p = self.p;
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(p), |acc, (i, c)| acc + Poly::var(p, i).scale(*c))
    }

    pub fn show(&self, v: &Vector) -> String {
        self.to_poly(v).display(&self.basis).to_string()
    }

    pub fn jacobiator(&self, a: &Vector, b: &Vector, c: &Vector) -> Vector {
        let t1 = self.bracket(a, &self.bracket(b, c));
        let t2 = self.bracket(b, &self.bracket(c, a));
        let t3 = self.bracket(c, &self.bracket(a, b));
        self.add(&self.add(&t1, &t2), &t3)
    }

    /// `v^{[p]}`, folding over coordinates in basis order with
    /// `(u + c x_i)^{[p]} = u^{[p]} + c^p x_i^{[p]} + Λ_p(u, c x_i)`.
    pub fn pp(&self, v: &Vector) -> Vector {
        let p = self.p;
        let mut acc = LieBracket::zero(self);
        let mut acc_pp = LieBracket::zero(self);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.scale(&self.basis_vector(i), *c);
            let value = self.scale(&self.pmap[i], p.pow(*c, p.get() as u64));
            acc_pp = self.add(&self.add(&acc_pp, &value), &lambda_p(self, &acc, &term));
            acc = self.add(&acc, &term);
        }
        acc_pp
    }

    /// A random element.
    pub fn sample(&self, s: &mut Sampler) -> Vector {
        (0..self.dim()).map(|_| s.scalar()).collect()
    }
}

impl LieBracket for RestrictedLieAlgebra {
    type Elem = Vector;

    fn prime(&self) -> PrimeChar {
        self.p
    }

    fn bracket(&self, a: &Vector, b: &Vector) -> Vector {
        let p = self.p;
        let mut out = vec![Scalar::ZERO; self.dim()];
        for (&(i, j), v) in &self.structure {
            // [a, b] picks up (a_i b_j - a_j b_i) [x_i, x_j]
            let c = p.sub(p.mul(a[i], b[j]), p.mul(a[j], b[i]));
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o = p.add(*o, p.mul(c, *x));
            }
        }
        out
    }

    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.p.add(*x, *y)).collect()
    }

    fn scale(&self, a: &Vector, c: Scalar) -> Vector {
        a.iter().map(|x| self.p.mul(*x, c)).collect()
    }

    fn zero(&self) -> Vector {
        vec![Scalar::ZERO; self.dim()]
    }

    fn is_zero(&self, a: &Vector) -> bool {
        a.iter().all(|c| c.is_zero())
    }
}

/// The restricted Lie axioms in a finite-dimensional algebra: Jacobi and
/// `ad_x^p = ad_{x^{[p]}}` on the basis, semilinearity for every scalar,
/// and additivity on basis pairs and random pairs.
pub fn verify_restricted_lie_fd(l: &RestrictedLieAlgebra, cfg: &SuiteConfig) -> Report {
    let mut report = Report::for_config("restricted-lie-fd", cfg);
    let p = l.prime();
    let pn = p.get() as usize;
    let n = l.dim();
    let e: Vec<Vector> = (0..n).map(|i| l.basis_vector(i)).collect();
    let mut s = Sampler::new(p, cfg.seed);
    let show = |v: &Vector| l.show(v);

    let mut jacobi = Check::new("jacobi-basis");
    for a in &e {
        for b in &e {
            for c in &e {
                let r = l.jacobiator(a, b, c);
                jacobi.record_eq(
                    LieBracket::is_zero(l, &r),
                    || vec![("a", show(a)), ("b", show(b)), ("c", show(c))],
                    || show(&r),
                    || "0".into(),
                );
            }
        }
    }
    report.push(jacobi);

    let ad_check = |check: &mut Check, x: &Vector, y: &Vector| {
        let lhs = l.ad_pow(x, pn, y);
        let rhs = l.bracket(&l.pp(x), y);
        check.record_eq(
            lhs == rhs,
            || vec![("x", show(x)), ("y", show(y))],
            || show(&lhs),
            || show(&rhs),
        );
    };
    let add_check = |check: &mut Check, x: &Vector, y: &Vector| {
        let lhs = l.pp(&l.add(x, y));
        let rhs = l.add(&l.add(&l.pp(x), &l.pp(y)), &lambda_p(l, x, y));
        check.record_eq(
            lhs == rhs,
            || vec![("x", show(x)), ("y", show(y))],
            || show(&lhs),
            || show(&rhs),
        );
    };

    let mut ad_b = Check::new("ad-power-basis");
    let mut add_b = Check::new("additivity-basis");
    for x in &e {
        for y in &e {
            ad_check(&mut ad_b, x, y);
            add_check(&mut add_b, x, y);
        }
    }
    report.push(ad_b);
    report.push(add_b);

    let mut ad = Check::new("ad-power");
    let mut semi = Check::new("semilinearity");
    let mut add = Check::new("additivity");
    for _ in 0..cfg.samples {
        let x = l.sample(&mut s);
        let y = l.sample(&mut s);
        let c = s.scalar();
        ad_check(&mut ad, &x, &y);
        add_check(&mut add, &x, &y);
        let lhs = l.pp(&l.scale(&x, c));
        let rhs = l.scale(&l.pp(&x), p.pow(c, pn as u64));
        semi.record_eq(
            lhs == rhs,
            || vec![("x", show(&x)), ("lambda", c.to_string())],
            || show(&lhs),
            || show(&rhs),
        );
    }
    report.push(ad);
    report.push(semi);
    report.push(add);
    report
}

/// The polynomial algebra on the basis of `l` with the linear bracket given by
/// the structure constants and the p-map generated by `x_i ↦ x_i^{[p]}`.
pub fn symmetric_poisson(l: &RestrictedLieAlgebra) -> Result<RestrictedPoissonAlgebra> {
    let table = l.structure.iter().map(|(&k, v)| (k, l.to_poly(v)));
    let alg = Arc::new(PoissonAlgebra::new(l.p, l.basis.clone(), table, None)?);
    let gamma = l.pmap.iter().map(|v| l.to_poly(v)).collect();
    RestrictedPoissonAlgebra::from_generators(alg, gamma, JacobsonCheck::default())
}

/// [`symmetric_poisson`] modulo `(x_i^p)`.
pub fn truncated_symmetric(l: &RestrictedLieAlgebra) -> Result<RestrictedPoissonAlgebra> {
    let sym = symmetric_poisson(l)?;
    quotient_restricted(&sym, &MonomialIdeal::powers(l.dim(), l.p.get()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted::{verify_frobenius_condition, verify_restricted_lie, FrobeniusMode};

    fn f3() -> PrimeChar {
        PrimeChar::new(3).unwrap()
    }

    #[test]
    fn sl2_brackets_and_powers() {
        let p = f3();
        let l = RestrictedLieAlgebra::sl2(p);
        let [e, h, f] = [0, 1, 2].map(|i| l.basis_vector(i));
        assert_eq!(l.bracket(&h, &e), l.scale(&e, p.scalar(2)));
        assert_eq!(l.bracket(&e, &f), h);
        // ad_e^3, ad_h^3, ad_f^3 computed by hand on the basis
        assert!(LieBracket::is_zero(&l, &l.ad_pow(&e, 3, &f)));
        assert_eq!(l.ad_pow(&h, 3, &e), l.bracket(&h, &e));
        assert_eq!(l.ad_pow(&h, 3, &f), l.bracket(&h, &f));
        assert!(LieBracket::is_zero(&l, &l.ad_pow(&f, 3, &e)));
        assert!(verify_restricted_lie_fd(&l, &SuiteConfig::default()).passed());
    }

    #[test]
    fn solvable_pmap_matches_closed_form() {
        for pv in [3, 5, 7] {
            let p = PrimeChar::new(pv).unwrap();
            let l = RestrictedLieAlgebra::solvable2(p);
            for a in p.elements() {
                for b in p.elements() {
                    let v = vec![a, b];
                    let k = p.pow(b, pv as u64 - 1);
                    assert_eq!(l.pp(&v), l.scale(&v, k), "p = {pv}, v = ({a}, {b})");
                }
            }
            assert!(verify_restricted_lie_fd(&l, &SuiteConfig::new(16, 3)).passed());
        }
    }

    #[test]
    fn abelian_and_rejected_tables() {
        let p = f3();
        let l = RestrictedLieAlgebra::abelian(p, &["a", "b"]);
        assert!(verify_restricted_lie_fd(&l, &SuiteConfig::default()).passed());
        let v = |a: i64, b: i64| vec![p.scalar(a), p.scalar(b)];
        let bad = RestrictedLieAlgebra::new(
            p,
            vec!["x".into(), "y".into()],
            [((0, 1), v(1, 0))],
            vec![v(0, 0), v(0, 0)],
        );
        assert!(
            matches!(bad, Err(Error::JacobsonFailure { ref generator, .. }) if generator == "y")
        );
    }

    #[test]
    fn symmetric_algebra_of_solvable_pair() {
        let p = f3();
        let a = symmetric_poisson(&RestrictedLieAlgebra::solvable2(p)).unwrap();
        let alg = a.base();
        assert_eq!(alg.bracket(&alg.var(0), &alg.var(1)), alg.var(0));
        assert!(a.pp(&alg.var(0)).is_zero());
        assert_eq!(a.pp(&alg.var(1)), alg.var(1));
        let cfg = SuiteConfig::new(16, 0);
        assert!(verify_restricted_lie(&a, &cfg).passed());
        assert!(verify_frobenius_condition(&a, FrobeniusMode::Product, &cfg).passed());
    }

    #[test]
    fn truncated_sl2_has_27_basis_monomials() {
        let t = truncated_symmetric(&RestrictedLieAlgebra::sl2(f3())).unwrap();
        assert_eq!(t.base().finite_basis().map(<[_]>::len), Some(27));
        let one_dim = truncated_symmetric(&RestrictedLieAlgebra::abelian(f3(), &["x"])).unwrap();
        assert_eq!(one_dim.base().finite_basis().map(<[_]>::len), Some(3));
        assert!(one_dim.base().table().is_empty());
    }
}
