//! Seeded sampling of scalars and degree-bounded polynomials.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{PrimeChar, Scalar};
use super::monomial::Monomial;
use super::poly::Poly;

pub const DEFAULT_MAX_DEGREE: u32 = 3;
pub const DEFAULT_MAX_TERMS: usize = 4;

/// Reproducible source of random test inputs.
pub struct Sampler {
    p: PrimeChar,
    rng: ChaCha8Rng,
    monomials: HashMap<(usize, u32), Vec<Monomial>>,
}

impl Sampler {
    pub fn new(p: PrimeChar, seed: u64) -> Self {
        Sampler {
            p,
            rng: ChaCha8Rng::seed_from_u64(seed),
            monomials: HashMap::new(),
        }
    }

    pub fn prime(&self) -> PrimeChar {
        self.p
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn scalar(&mut self) -> Scalar {
        self.p.scalar(self.rng.gen_range(0..self.p.get()) as i64)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        self.p.scalar(self.rng.gen_range(1..self.p.get()) as i64)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A polynomial with between 1 and `max_terms` terms drawn uniformly from
    /// the monomials of degree at most `max_degree`.
    pub fn poly_with(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> Poly {
        let pool = self
            .monomials
            .entry((nvars, max_degree))
            .or_insert_with(|| Monomial::all_up_to(nvars, max_degree));
        let n = self.rng.gen_range(1..=max_terms.max(1));
        let picks: Vec<Monomial> = pool
            .choose_multiple(&mut self.rng, n.min(pool.len()))
            .cloned()
            .collect();
        let terms: Vec<_> = picks
            .into_iter()
            .map(|m| (m, self.nonzero_scalar()))
            .collect();
        Poly::from_terms(self.p, terms)
    }

    pub fn poly(&mut self, nvars: usize) -> Poly {
        self.poly_with(nvars, DEFAULT_MAX_DEGREE, DEFAULT_MAX_TERMS)
    }

    /// Picks from a fixed list of candidate elements.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items
            .choose(&mut self.rng)
            .expect("nonempty candidate list")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let k = PrimeChar::new(5).unwrap();
        let mut a = Sampler::new(k, 7);
        let mut b = Sampler::new(k, 7);
        for _ in 0..20 {
            assert_eq!(a.poly(3), b.poly(3));
        }
    }

    #[test]
    fn respects_bounds() {
        let k = PrimeChar::new(3).unwrap();
        let mut s = Sampler::new(k, 1);
        for _ in 0..100 {
            let f = s.poly_with(2, 4, 3);
            assert!(!f.is_zero());
            assert!(f.len() <= 3);
            assert!(f.degree().unwrap() <= 4);
        }
    }
}
