//! Jacobson's coefficients `s_i`, the additivity defect `Λ_p` and the
//! multiplicativity defect `Φ_p` of a p-map.

use crate::algebra::{Poly, PrimeChar, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;

/// A Lie algebra over `F_p` with enough vector-space structure to expand
/// Jacobson's formulas.
pub trait LieBracket {
    type Elem: Clone + PartialEq;

    fn prime(&self) -> PrimeChar;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: Scalar) -> Self::Elem;
    fn zero(&self) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let p = self.prime();
        self.add(a, &self.scale(b, p.neg(Scalar::ONE)))
    }

    /// `ad_x^k(y)`.
    fn ad_pow(&self, x: &Self::Elem, k: usize, y: &Self::Elem) -> Self::Elem {
        let mut acc = y.clone();
        for _ in 0..k {
            if self.is_zero(&acc) {
                break;
            }
            acc = self.bracket(x, &acc);
        }
        acc
    }
}

impl LieBracket for PoissonAlgebra {
    type Elem = Poly;

    fn prime(&self) -> PrimeChar {
        PoissonAlgebra::prime(self)
    }

    fn bracket(&self, a: &Poly, b: &Poly) -> Poly {
        PoissonAlgebra::bracket(self, a, b)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }

    fn scale(&self, a: &Poly, c: Scalar) -> Poly {
        a.scale(c)
    }

    fn zero(&self) -> Poly {
        PoissonAlgebra::zero(self)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
}

/// `[s_1(x, y), ..., s_{p-1}(x, y)]`, where `s_i` is the coefficient of
/// `t^{i-1}` in `ad_{tx+y}^{p-1}(x)`.
///
/// The expansion applies `t ad_x + ad_y` to a coefficient vector `p - 1`
/// times, costing `O(p^2)` brackets.
pub fn s_coeffs<L: LieBracket>(l: &L, x: &L::Elem, y: &L::Elem) -> Vec<L::Elem> {
    let p = l.prime().get() as usize;
    let mut coeffs = vec![x.clone()];
    for _ in 0..p - 1 {
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        for k in 0..=coeffs.len() {
            let mut c = l.zero();
            if k < coeffs.len() && !l.is_zero(&coeffs[k]) {
                c = l.bracket(y, &coeffs[k]);
            }
            if k > 0 && !l.is_zero(&coeffs[k - 1]) {
                c = l.add(&c, &l.bracket(x, &coeffs[k - 1]));
            }
            next.push(c);
        }
        coeffs = next;
    }
    coeffs.truncate(p - 1);
    coeffs
}

/// `s_i(x, y)` for `1 <= i <= p - 1`.
pub fn s_coeff<L: LieBracket>(l: &L, x: &L::Elem, y: &L::Elem, i: usize) -> Result<L::Elem> {
    let max = l.prime().get() as usize - 1;
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(s_coeffs(l, x, y).swap_remove(i - 1))
}

/// `Λ_p(x, y) = sum_i s_i(x, y) / i`.
pub fn lambda_p<L: LieBracket>(l: &L, x: &L::Elem, y: &L::Elem) -> L::Elem {
    let p = l.prime();
    if l.is_zero(x) || l.is_zero(y) {
        return l.zero();
    }
    s_coeffs(l, x, y)
        .iter()
        .enumerate()
        .fold(l.zero(), |acc, (i, s)| {
            l.add(&acc, &l.scale(s, p.inv_int(i as i64 + 1)))
        })
}

/// `Φ_p(x, y) = (x^p + y^p) Λ_p(x, y) - (Λ_p(x^2, y^2) + Λ_p(x^2 + y^2, 2xy)) / 2`.
pub fn phi_p(alg: &PoissonAlgebra, x: &Poly, y: &Poly) -> Poly {
    let p = alg.prime();
    let x2 = alg.mul(x, x);
    let y2 = alg.mul(y, y);
    let xy2 = alg.mul(x, y).scale_int(2);
    let first = alg.mul(&(alg.frobenius(x) + alg.frobenius(y)), &lambda_p(alg, x, y));
    let second = lambda_p(alg, &x2, &y2) + lambda_p(alg, &(&x2 + &y2), &xy2);
    first - second.scale(p.inv_int(2))
}

/// The alternative form of `Φ_p` obtained from `xy = ((x+y)^2 - (x-y)^2) / 4`:
/// `Λ_p((x+y)^2, -(x-y)^2) / 4 + ((x^p+y^p) Λ_p(x,y) - (x^p-y^p) Λ_p(x,-y)) / 2`.
pub fn phi_p_prime(alg: &PoissonAlgebra, x: &Poly, y: &Poly) -> Poly {
    let p = alg.prime();
    let s = x + y;
    let d = x - y;
    let a = lambda_p(alg, &alg.mul(&s, &s), &-alg.mul(&d, &d)).scale(p.inv_int(4));
    let xp = alg.frobenius(x);
    let yp = alg.frobenius(y);
    let b =
        alg.mul(&(&xp + &yp), &lambda_p(alg, x, y)) - alg.mul(&(&xp - &yp), &lambda_p(alg, x, &-y));
    a + b.scale(p.inv_int(2))
}
