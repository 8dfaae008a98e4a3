//! Changing a p-map: Frobenius-derivation shifts, arbitrary semilinear shifts
//! and passage to restricted quotients.

use std::sync::Arc;

use super::pmap::{PMapEval, RestrictedPoissonAlgebra};
use crate::algebra::{Monomial, MonomialIdeal, Poly, Sampler};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;

/// The derivation of the algebra sending `x_i` to `images[i]`.
#[derive(Clone, Debug)]
pub struct Derivation {
    images: Vec<Poly>,
}

impl Derivation {
    pub fn new(alg: &PoissonAlgebra, images: Vec<Poly>) -> Result<Self> {
        if images.len() != alg.nvars() {
            return Err(Error::MissingGenerator(
                alg.vars().get(images.len()).cloned().unwrap_or_default(),
            ));
        }
        for f in &images {
            alg.check_element(f)?;
        }
        let d = Derivation {
            images: images.iter().map(|f| alg.reduce(f)).collect(),
        };
        for m in alg.quotient().generators() {
            let image = d.apply_raw(&alg.monomial_unreduced(m));
            if !alg.quotient().contains_poly(&image) {
                return Err(Error::DerivationNotCompatible(
                    alg.show(&alg.monomial_unreduced(m)),
                ));
            }
        }
        Ok(d)
    }

    fn apply_raw(&self, f: &Poly) -> Poly {
        let mut acc = Poly::zero(f.prime());
        for (i, img) in self.images.iter().enumerate() {
            if !img.is_zero() {
                let d = f.partial(i);
                if !d.is_zero() {
                    acc = acc + d * img;
                }
            }
        }
        acc
    }

    pub fn apply(&self, alg: &PoissonAlgebra, f: &Poly) -> Poly {
        alg.reduce(&self.apply_raw(f))
    }
}

/// `pp'(f) = pp(f) + ψ(f)^p` for a derivation `ψ`.
struct FrobeniusShift {
    base: Arc<PoissonAlgebra>,
    inner: Arc<dyn PMapEval>,
    derivation: Derivation,
}

impl PMapEval for FrobeniusShift {
    fn eval(&self, f: &Poly) -> Poly {
        let alg = &*self.base;
        self.inner.eval(f) + alg.frobenius(&self.derivation.apply(alg, f))
    }
}

fn is_central(alg: &PoissonAlgebra, z: &Poly) -> Option<(Poly, Poly)> {
    (0..alg.nvars()).find_map(|i| {
        let x = alg.var(i);
        let b = alg.bracket(z, &x);
        (!b.is_zero()).then_some((x, b))
    })
}

/// Adds the Frobenius derivation `f -> ψ0(f)^p` to the p-map, where `ψ0` is
/// the derivation with the given generator images.
///
/// The values `ψ0(f)^p` must be Poisson-central; this is checked on the
/// generators and on `samples` random elements.
pub fn modify_pmap(
    a: &RestrictedPoissonAlgebra,
    derivation_images: Vec<Poly>,
    samples: usize,
    seed: u64,
) -> Result<RestrictedPoissonAlgebra> {
    let alg = a.base_arc().clone();
    let derivation = Derivation::new(&alg, derivation_images)?;
    let mut probes: Vec<Poly> = (0..alg.nvars()).map(|i| alg.var(i)).collect();
    let mut s = Sampler::new(alg.prime(), seed);
    probes.extend((0..samples).map(|_| alg.sample(&mut s)));
    for f in &probes {
        let value = alg.frobenius(&derivation.apply(&alg, f));
        if let Some((x, b)) = is_central(&alg, &value) {
            return Err(Error::NotCentral {
                value: alg.show(&value),
                element: alg.show(&x),
                bracket: alg.show(&b),
            });
        }
    }
    let shift = FrobeniusShift {
        base: alg,
        inner: a.pmap().clone(),
        derivation,
    };
    Ok(a.with_pmap(Arc::new(shift)))
}

/// `pp'(f) = pp(f) + Σ_m coeff_m(f) z_m` for central values `z_m` attached to
/// monomials `m`. This is additive and semilinear, so `pp'` is still a
/// restricted Lie map, but it is generally not a Frobenius derivation.
struct SemilinearShift {
    inner: Arc<dyn PMapEval>,
    values: Vec<(Monomial, Poly)>,
}

impl PMapEval for SemilinearShift {
    fn eval(&self, f: &Poly) -> Poly {
        let mut acc = self.inner.eval(f);
        for (m, z) in &self.values {
            let c = f.coeff(m);
            if !c.is_zero() {
                acc = acc + z.scale(c);
            }
        }
        acc
    }
}

/// Adds a semilinear map with central values, given by its values on
/// selected basis monomials (zero on all others).
pub fn add_semilinear_shift(
    a: &RestrictedPoissonAlgebra,
    values: Vec<(Monomial, Poly)>,
) -> Result<RestrictedPoissonAlgebra> {
    let alg = a.base();
    for (_, z) in &values {
        alg.check_element(z)?;
        if let Some((x, b)) = is_central(alg, z) {
            return Err(Error::NotCentral {
                value: alg.show(z),
                element: alg.show(&x),
                bracket: alg.show(&b),
            });
        }
    }
    let values = values
        .into_iter()
        .map(|(m, z)| (m, alg.reduce(&z)))
        .collect();
    Ok(a.with_pmap(Arc::new(SemilinearShift {
        inner: a.pmap().clone(),
        values,
    })))
}

/// `pp(f mod I) = pp(f) mod I`.
struct QuotientPMap {
    quotient: Arc<PoissonAlgebra>,
    inner: Arc<dyn PMapEval>,
}

impl PMapEval for QuotientPMap {
    fn eval(&self, f: &Poly) -> Poly {
        self.quotient.reduce(&self.inner.eval(f))
    }
}

/// Passes to the quotient by a monomial ideal that is closed under brackets
/// and whose generators have p-map images inside it.
pub fn quotient_restricted(
    a: &RestrictedPoissonAlgebra,
    ideal: &MonomialIdeal,
) -> Result<RestrictedPoissonAlgebra> {
    let q = Arc::new(a.base().with_quotient(ideal)?);
    for m in ideal.generators() {
        let g = a.base().monomial(m);
        let image = a.pp(&g);
        let reduced = q.reduce(&image);
        if !reduced.is_zero() {
            return Err(Error::NotRestricted {
                ideal_generator: a.base().show(&a.base().monomial_unreduced(m)),
                image: a.base().show(&image),
            });
        }
    }
    let pm = QuotientPMap {
        quotient: q.clone(),
        inner: a.pmap().clone(),
    };
    Ok(RestrictedPoissonAlgebra::new(q, Arc::new(pm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeChar;
    use crate::restricted::pmap::JacobsonCheck;

    fn classical3() -> RestrictedPoissonAlgebra {
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
        RestrictedPoissonAlgebra::from_generators(alg, vec![z.clone(), z], JacobsonCheck::default())
            .unwrap()
    }

    #[test]
    fn zero_derivation_changes_nothing() {
        let a = classical3();
        let z = a.base().zero();
        let b = modify_pmap(&a, vec![z.clone(), z], 8, 0).unwrap();
        let f = a.base().parse("x^2 y + y^3 + x").unwrap();
        assert_eq!(b.pp(&f), a.pp(&f));
    }

    #[test]
    fn d_by_dx_shift() {
        let a = classical3();
        let alg = a.base();
        let b = modify_pmap(&a, vec![alg.one(), alg.zero()], 8, 0).unwrap();
        let e = |s: &str| alg.parse(s).unwrap();
        assert_eq!(b.pp(&e("x")), a.pp(&e("x")) + e("1"));
        assert_eq!(b.pp(&e("x^2")), a.pp(&e("x^2")) + e("2 x^3"));
    }

    #[test]
    fn non_central_shift_is_rejected() {
        let a = classical3();
        let alg = a.base();
        let err = add_semilinear_shift(&a, vec![(Monomial::var(0), alg.var(0))]).unwrap_err();
        assert!(matches!(err, Error::NotCentral { .. }));
    }

    #[test]
    fn quotients() {
        let a = classical3();
        let ok = quotient_restricted(&a, &MonomialIdeal::powers(2, 3)).unwrap();
        assert_eq!(ok.base().finite_basis().unwrap().len(), 9);
        let whole = quotient_restricted(&a, &MonomialIdeal::whole()).unwrap();
        assert!(whole.pp(&whole.base().parse("x y").unwrap()).is_zero());
        let err = quotient_restricted(&a, &MonomialIdeal::new([Monomial::var(0)])).unwrap_err();
        assert!(matches!(err, Error::NotPoissonClosed { .. }));
    }

    #[test]
    fn quotient_needs_restricted_ideal() {
        // abelian plane with pp(x) = 1, pp(y) = 0
        let alg = Arc::new(
            PoissonAlgebra::from_strings(PrimeChar::new(3).unwrap(), &["x", "y"], &[], &[])
                .unwrap(),
        );
        let a = RestrictedPoissonAlgebra::from_generators(
            alg.clone(),
            vec![alg.one(), alg.zero()],
            JacobsonCheck::default(),
        )
        .unwrap();
        // pp(x y) = x^3 pp(y) + y^3 pp(x) = y^3, not in (x y)
        let err = quotient_restricted(&a, &MonomialIdeal::new([Monomial::from_exponents(&[1, 1])]))
            .unwrap_err();
        assert!(matches!(err, Error::NotRestricted { .. }));
    }
}
