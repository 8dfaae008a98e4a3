//! Monomial ideals and reduction modulo them.

use super::monomial::Monomial;
use super::poly::Poly;

/// An ideal generated by monomials. Generators are kept minimal under
/// divisibility and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(generators: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = generators.into_iter().collect();
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        // ascending degree order means any divisor of g has already been seen
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            generators: minimal,
        }
    }

    /// The ideal `(x_i^e)` for every variable.
    pub fn powers(nvars: usize, e: u32) -> Self {
        Self::new((0..nvars).map(|i| Monomial::var_pow(i, e)))
    }

    /// The unit ideal `(1)`.
    pub fn whole() -> Self {
        Self::new([Monomial::one()])
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Whether every term of `f` lies in the ideal.
    pub fn contains_poly(&self, f: &Poly) -> bool {
        f.terms().iter().all(|(m, _)| self.contains(m))
    }

    /// Deletes every term whose monomial lies in the ideal.
    pub fn reduce(&self, f: &Poly) -> Poly {
        if self.is_zero() || f.terms().iter().all(|(m, _)| !self.contains(m)) {
            return f.clone();
        }
        Poly::from_terms(
            f.prime(),
            f.terms().iter().filter(|(m, _)| !self.contains(m)).cloned(),
        )
    }

    /// The standard monomials of the quotient when it is finite-dimensional,
    /// i.e. when some power of every variable lies in the ideal.
    pub fn finite_basis(&self, nvars: usize) -> Option<Vec<Monomial>> {
        let mut bounds = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let e = self
                .generators
                .iter()
                .filter(|g| {
                    g.exponents()
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| j == i || e == 0)
                })
                .map(|g| g.exponent(i))
                .min()?;
            bounds.push(e);
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        loop {
            let m = Monomial::from_exponents(&cur);
            if !self.contains(&m) {
                out.push(m);
            }
            // odometer increment over the box prod [0, bounds[i])
            let mut i = 0;
            loop {
                if i == nvars {
                    out.sort();
                    return Some(out);
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeChar;

    const XY: [&str; 2] = ["x", "y"];

    fn poly(s: &str) -> Poly {
        Poly::parse(PrimeChar::new(3).unwrap(), &XY, s).unwrap()
    }

    #[test]
    fn reduction_drops_ideal_terms() {
        let i = MonomialIdeal::powers(2, 3);
        assert!(i.reduce(&poly("x^3")).is_zero());
        assert_eq!(i.reduce(&poly("x^2 y + x^4")), poly("x^2 y"));
        assert_eq!(MonomialIdeal::default().reduce(&poly("x^4")), poly("x^4"));
        let f = poly("x^5 + x y^3 + 2 y + 1");
        assert_eq!(i.reduce(&i.reduce(&f)), i.reduce(&f));
    }

    #[test]
    fn generators_are_minimal() {
        let i = MonomialIdeal::new([Monomial::from_exponents(&[2, 1]), Monomial::var(0)]);
        assert_eq!(i.generators(), &[Monomial::var(0)]);
    }

    #[test]
    fn finite_bases() {
        assert_eq!(
            MonomialIdeal::powers(3, 3).finite_basis(3).unwrap().len(),
            27
        );
        let sq = MonomialIdeal::new([
            Monomial::var_pow(0, 2),
            Monomial::from_exponents(&[1, 1]),
            Monomial::var_pow(1, 2),
        ]);
        assert_eq!(sq.finite_basis(2).unwrap().len(), 3);
        assert!(MonomialIdeal::new([Monomial::var_pow(0, 2)])
            .finite_basis(2)
            .is_none());
        assert!(MonomialIdeal::whole().finite_basis(2).unwrap().is_empty());
    }
}
