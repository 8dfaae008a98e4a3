//! Prime field arithmetic for small odd characteristic.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper bound on the characteristic.
pub const MAX_PRIME: u32 = 7;

/// An odd prime `p` with `3 <= p <= bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeChar(u32);

/// A residue in `[0, p)`. Arithmetic goes through the owning [`PrimeChar`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Scalar(u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeChar {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_bound(p, MAX_PRIME)
    }

    pub fn with_bound(p: u32, bound: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if p > bound {
            return Err(Error::PrimeTooLarge { p, bound });
        }
        Ok(PrimeChar(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn scalar(self, v: i64) -> Scalar {
        Scalar(v.rem_euclid(self.0 as i64) as u32)
    }

    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar((a.0 + b.0) % self.0)
    }

    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar((a.0 + self.0 - b.0) % self.0)
    }

    pub fn neg(self, a: Scalar) -> Scalar {
        Scalar((self.0 - a.0) % self.0)
    }

    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar((a.0 * b.0) % self.0)
    }

    pub fn pow(self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: Scalar) -> Option<Scalar> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, (self.0 - 2) as u64))
        }
    }

    /// Inverse of the integer `n`, which must be prime to `p`.
    pub fn inv_int(self, n: i64) -> Scalar {
        self.inv(self.scalar(n))
            .unwrap_or_else(|| panic!("{n} is not invertible mod {}", self.0))
    }

    /// `n! mod p`.
    pub fn factorial(self, n: u64) -> Scalar {
        if n >= self.0 as u64 {
            return Scalar::ZERO;
        }
        (1..=n).fold(Scalar::ONE, |acc, k| self.mul(acc, self.scalar(k as i64)))
    }

    /// `C(n, k) mod p` via Lucas' theorem; never divides by anything divisible by `p`.
    pub fn binomial(self, mut n: u64, mut k: u64) -> Scalar {
        if k > n {
            return Scalar::ZERO;
        }
        let p = self.0 as u64;
        let mut acc = Scalar::ONE;
        while k > 0 || n > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return Scalar::ZERO;
            }
            acc = self.mul(acc, self.small_binomial(nd, kd));
            n /= p;
            k /= p;
        }
        acc
    }

    // C(n, k) for n < p, where every factorial is invertible.
    fn small_binomial(self, n: u64, k: u64) -> Scalar {
        let num = self.factorial(n);
        let den = self.mul(self.factorial(k), self.factorial(n - k));
        self.mul(num, self.inv(den).expect("factorials below p are units"))
    }

    /// Iterator over all residues `0..p`.
    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        (0..self.0).map(Scalar)
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert!(matches!(PrimeChar::new(2), Err(Error::InvalidPrime(2))));
        assert!(matches!(PrimeChar::new(4), Err(Error::InvalidPrime(4))));
        assert!(matches!(PrimeChar::new(9), Err(Error::InvalidPrime(9))));
        assert!(matches!(
            PrimeChar::new(11),
            Err(Error::PrimeTooLarge { .. })
        ));
        assert!(PrimeChar::with_bound(11, 13).is_ok());
        for p in [3, 5, 7] {
            assert!(PrimeChar::new(p).is_ok());
        }
    }

    #[test]
    fn inverses() {
        for p in [3, 5, 7] {
            let k = PrimeChar::new(p).unwrap();
            for a in k.elements().filter(|a| !a.is_zero()) {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), Scalar::ONE);
            }
            assert_eq!(k.inv(Scalar::ZERO), None);
        }
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        fn exact(n: u64, k: u64) -> u128 {
            if k > n {
                return 0;
            }
            let mut acc: u128 = 1;
            for i in 0..k {
                acc = acc * (n - i) as u128 / (i + 1) as u128;
            }
            acc
        }
        for p in [3u32, 5, 7] {
            let k = PrimeChar::new(p).unwrap();
            for n in 0..40u64 {
                for r in 0..=n + 1 {
                    let want = (exact(n, r) % p as u128) as u32;
                    assert_eq!(k.binomial(n, r).value(), want, "C({n},{r}) mod {p}");
                }
            }
        }
    }
}
