//! Polynomials in a formal parameter `t` with coefficients in `F_p[x]`,
//! truncated above a fixed degree.

use std::fmt;

use super::field::{PrimeChar, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<Poly>,
}

impl TSeries {
    pub fn zero(p: PrimeChar, truncation: usize) -> Self {
        TSeries {
            coeffs: vec![Poly::zero(p); truncation + 1],
        }
    }

    /// The constant series `f + 0 t + ...`.
    pub fn constant(f: Poly, truncation: usize) -> Self {
        let mut s = Self::zero(f.prime(), truncation);
        s.coeffs[0] = f;
        s
    }

    /// Builds a series from its coefficients, discarding those above the truncation.
    pub fn from_coeffs(p: PrimeChar, coeffs: Vec<Poly>, truncation: usize) -> Self {
        let mut s = Self::zero(p, truncation);
        for (k, c) in coeffs.into_iter().enumerate().take(truncation + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn prime(&self) -> PrimeChar {
        self.coeffs[0].prime()
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero above the truncation.
    pub fn coeff(&self, n: usize) -> Poly {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.prime()))
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    fn check(&self, other: &TSeries) -> Result<()> {
        self.coeffs[0].same_char(&other.coeffs[0])?;
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch(
                self.truncation(),
                other.truncation(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TSeries) -> Result<TSeries> {
        self.check(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TSeries) -> Result<TSeries> {
        self.check(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &TSeries) -> Result<TSeries> {
        self.check(other)?;
        let n = self.truncation();
        let mut out = Self::zero(self.prime(), n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: Scalar) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> SeriesDisplay<'a, S> {
        SeriesDisplay { s: self, names }
    }
}

impl fmt::Debug for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

pub struct SeriesDisplay<'a, S> {
    s: &'a TSeries,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for SeriesDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.s.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let wrap = c.len() > 1 && k > 0;
            if wrap {
                write!(f, "(")?;
            }
            write!(f, "{}", c.display(self.names))?;
            if wrap {
                write!(f, ")")?;
            }
            match k {
                0 => {}
                1 => write!(f, "*t")?,
                _ => write!(f, "*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: [&str; 2] = ["x", "y"];

    fn k() -> PrimeChar {
        PrimeChar::new(5).unwrap()
    }

    fn poly(s: &str) -> Poly {
        Poly::parse(k(), &XY, s).unwrap()
    }

    #[test]
    fn cauchy_product_truncates() {
        let a = TSeries::from_coeffs(k(), vec![poly("x"), poly("1")], 2);
        let b = TSeries::from_coeffs(k(), vec![poly("x"), poly("-1")], 2);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.coeff(0), poly("x^2"));
        assert!(c.coeff(1).is_zero());
        assert_eq!(c.coeff(2), poly("-1"));
        let d = TSeries::from_coeffs(k(), vec![poly("1"), poly("1")], 1);
        assert_eq!(d.mul(&d).unwrap().coeffs().len(), 2);
    }

    #[test]
    fn constant_and_zero_series() {
        let f = TSeries::constant(poly("x + y"), 3);
        let g = TSeries::constant(poly("x"), 3);
        assert_eq!(f.mul(&g).unwrap(), TSeries::constant(poly("x^2 + x y"), 3));
        assert!(f.mul(&TSeries::zero(k(), 3)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_truncation_is_an_error() {
        let e = TSeries::zero(k(), 2)
            .mul(&TSeries::zero(k(), 3))
            .unwrap_err();
        assert_eq!(e, Error::TruncationMismatch(2, 3));
    }
}
