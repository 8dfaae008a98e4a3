//! Named restricted Poisson algebras with explicitly known p-maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{MonomialIdeal, Poly, PrimeChar, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::quantize::{KernelMode, StarAlgebra};
use crate::report::SuiteConfig;
use crate::restricted::{quotient_restricted, PMapEval, RestrictedPoissonAlgebra};

use super::fd::{symmetric_poisson, truncated_symmetric, RestrictedLieAlgebra};

/// Catalog names, each with the only prime it supports (if restricted).
pub const CATALOG: &[(&str, Option<u32>)] = &[
    ("classical2", Some(3)),
    ("classical2-p5", Some(5)),
    ("affine-bracket-p3", Some(3)),
    ("constant-bracket-n", Some(3)),
    ("trivial-extension", None),
    ("truncated-B2n", None),
    ("sl2-sym", None),
    ("sl2-trunc", None),
];

/// Integer parameters of catalog entries, by name.
pub type Params = BTreeMap<String, i64>;

fn param(params: &Params, name: &str, default: i64) -> i64 {
    params.get(name).copied().unwrap_or(default)
}

/// `∂_x^a ∂_y^b f`.
fn d(f: &Poly, a: u32, b: u32) -> Poly {
    f.partial_n(0, a).partial_n(1, b)
}

/// `f_x^2 f_yy + f_y^2 f_xx + f_x f_y f_xy` for `{x, y} = 1` in characteristic 3.
struct ClassicalCubic;

impl PMapEval for ClassicalCubic {
    fn eval(&self, f: &Poly) -> Poly {
        let (f1, f2) = (d(f, 1, 0), d(f, 0, 1));
        let (f11, f12, f22) = (d(f, 2, 0), d(f, 1, 1), d(f, 0, 2));
        &f1 * &f1 * &f22 + &f2 * &f2 * &f11 + &f1 * &f2 * &f12
    }
}

/// The quintic closed form for `{x, y} = 1` in characteristic 5.
struct ClassicalQuintic;

impl PMapEval for ClassicalQuintic {
    fn eval(&self, f: &Poly) -> Poly {
        let (f1, f2) = (d(f, 1, 0), d(f, 0, 1));
        let (f11, f12, f22) = (d(f, 2, 0), d(f, 1, 1), d(f, 0, 2));
        let (f111, f112, f122, f222) = (d(f, 3, 0), d(f, 2, 1), d(f, 1, 2), d(f, 0, 3));
        let (f1111, f1112, f1122, f1222, f2222) =
            (d(f, 4, 0), d(f, 3, 1), d(f, 2, 2), d(f, 1, 3), d(f, 0, 4));
        let p1 = |k: u64| f1.pow(k);
        let p2 = |k: u64| f2.pow(k);

        let quartic = &p1(4) * &f2222
            + &p1(3) * &f2 * &f1222
            + &p1(2) * &p2(2) * &f1122
            + &f1 * &p2(3) * &f1112
            + &p2(4) * &f1111;
        let a =
            &f12 * &(&p1(3) * &f222 - &p1(2) * &f2 * &f122 - &f1 * &p2(2) * &f112 + &p2(3) * &f111);
        let b = &f1 * &f22 * &(&p1(2) * &f122 - (&f1 * &f2 * &f112).scale_int(2) + &p2(2) * &f111);
        let c = &f2 * &f11 * &(&p2(2) * &f112 - (&f2 * &f1 * &f122).scale_int(2) + &p1(2) * &f222);
        let e = (&f12 * &f12 - &f11 * &f22)
            * (&p1(2) * &f22 - (&f1 * &f2 * &f12).scale_int(2) + &p2(2) * &f11);
        quartic + a - b - c + e.scale_int(2)
    }
}

/// The closed form for `{f, g} = φ (f_x g_y - f_y g_x)`, `φ = λx + μy + ν`,
/// in characteristic 3.
struct AffineCubic {
    lambda: Scalar,
    mu: Scalar,
    phi: Poly,
}

impl PMapEval for AffineCubic {
    fn eval(&self, f: &Poly) -> Poly {
        let p = f.prime();
        let (fx, fy) = (d(f, 1, 0), d(f, 0, 1));
        let (fxx, fxy, fyy) = (d(f, 2, 0), d(f, 1, 1), d(f, 0, 2));
        let phi = &self.phi;
        let (l, m) = (self.lambda, self.mu);
        let x = Poly::var(p, 0);
        let y = Poly::var(p, 1);
        (phi * &fx * &fy * &fy).scale(l)
            + (phi * &fx * &fx * &fy).scale(m)
            + phi * phi * &(&fx * &fx * &fyy + &fy * &fy * &fxx + &fx * &fy * &fxy)
            + (&y * &fy.pow(3)).scale(p.mul(l, l))
            + (&x * &fx.pow(3)).scale(p.mul(m, m))
    }
}

/// `Σ_{i,j,k,l} c_ij c_kl f_i f_k f_jl` for `{x_i, x_j} = 2 c_ij` in characteristic 3.
struct ConstantCubic {
    c: Vec<Vec<Scalar>>,
}

impl PMapEval for ConstantCubic {
    fn eval(&self, f: &Poly) -> Poly {
        let n = self.c.len();
        let first: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
        // v_j = Σ_i c_ij f_i, and the sum is Σ_{j,l} v_j v_l f_jl
        let v: Vec<Poly> = (0..n)
            .map(|j| (0..n).map(|i| first[i].scale(self.c[i][j])).sum())
            .collect();
        let mut acc = Poly::zero(f.prime());
        for j in 0..n {
            for l in 0..n {
                let fjl = first[j].partial(l);
                if !fjl.is_zero() {
                    acc = acc + &v[j] * &v[l] * &fjl;
                }
            }
        }
        acc
    }
}

/// `pp(λ_0 + λ_1 x + λ_2 y) = λ_2^{p-1} (λ_1 x + λ_2 y)` on `K[x,y]/(x^2, xy, y^2)`.
struct TrivialExtension;

impl PMapEval for TrivialExtension {
    fn eval(&self, f: &Poly) -> Poly {
        let p = f.prime();
        let linear = f - &Poly::constant(p, f.constant_term());
        let l2 = f.coeff(&crate::algebra::Monomial::var(1));
        linear.scale(p.pow(l2, p.get() as u64 - 1))
    }
}

fn prime_for(name: &str, p: PrimeChar) -> Result<()> {
    match CATALOG.iter().find(|(n, _)| *n == name) {
        None => Err(Error::UnknownCatalog(name.into())),
        Some((_, Some(required))) if *required != p.get() => Err(Error::CatalogPrime {
            name: name.into(),
            required: *required,
            got: p.get(),
        }),
        Some(_) => Ok(()),
    }
}

/// The prime a catalog entry is usually built over.
pub fn default_prime(name: &str) -> Option<u32> {
    CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p.unwrap_or(3))
}

fn classical_plane(p: PrimeChar, bracket: &str) -> Result<Arc<PoissonAlgebra>> {
    Ok(Arc::new(PoissonAlgebra::from_strings(
        p,
        &["x", "y"],
        &[("x", "y", bracket)],
        &[],
    )?))
}

/// Builds a catalog entry.
///
/// Parameters: `affine-bracket-p3` takes `lambda`, `mu`, `nu` (defaults 1, 2, 1);
/// `constant-bracket-n` takes `n` (default 3) and uses `c_ij = 1` when `i + j`
/// is even and `2` otherwise, for `1 ≤ i < j ≤ n`; `truncated-B2n` takes `n`
/// (default 1).
pub fn catalog(name: &str, p: PrimeChar, params: &Params) -> Result<RestrictedPoissonAlgebra> {
    prime_for(name, p)?;
    let sc = |v: i64| p.scalar(v);
    match name {
        "classical2" => Ok(RestrictedPoissonAlgebra::new(
            classical_plane(p, "1")?,
            Arc::new(ClassicalCubic),
        )),
        "classical2-p5" => Ok(RestrictedPoissonAlgebra::new(
            classical_plane(p, "1")?,
            Arc::new(ClassicalQuintic),
        )),
        "affine-bracket-p3" => {
            let (l, m, n) = (
                param(params, "lambda", 1),
                param(params, "mu", 2),
                param(params, "nu", 1),
            );
            let phi = Poly::var(p, 0).scale(sc(l)) + Poly::var(p, 1).scale(sc(m)) + Poly::int(p, n);
            let alg = Arc::new(PoissonAlgebra::new(
                p,
                vec!["x".into(), "y".into()],
                [((0, 1), phi.clone())],
                None,
            )?);
            Ok(RestrictedPoissonAlgebra::new(
                alg,
                Arc::new(AffineCubic {
                    lambda: sc(l),
                    mu: sc(m),
                    phi,
                }),
            ))
        }
        "constant-bracket-n" => {
            let n = param(params, "n", 3);
            if !(1..=16).contains(&n) {
                return Err(Error::Unsupported(format!(
                    "constant-bracket-n with n = {n}"
                )));
            }
            let n = n as usize;
            let entry = |i: usize, j: usize| match i.cmp(&j) {
                std::cmp::Ordering::Equal => Scalar::ZERO,
                std::cmp::Ordering::Less if (i + j).is_multiple_of(2) => sc(1),
                std::cmp::Ordering::Less => sc(2),
                std::cmp::Ordering::Greater if (i + j).is_multiple_of(2) => p.neg(sc(1)),
                std::cmp::Ordering::Greater => p.neg(sc(2)),
            };
            let c: Vec<Vec<Scalar>> = (0..n)
                .map(|i| (0..n).map(|j| entry(i, j)).collect())
                .collect();
            let table: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| ((i, j), Poly::constant(p, p.mul(sc(2), c[i][j]))))
                .collect();
            let vars = (1..=n).map(|i| format!("x{i}")).collect();
            let alg = Arc::new(PoissonAlgebra::new(p, vars, table, None)?);
            Ok(RestrictedPoissonAlgebra::new(
                alg,
                Arc::new(ConstantCubic { c }),
            ))
        }
        "trivial-extension" => {
            let alg = Arc::new(PoissonAlgebra::from_strings(
                p,
                &["x", "y"],
                &[("x", "y", "x")],
                &["x^2", "x*y", "y^2"],
            )?);
            Ok(RestrictedPoissonAlgebra::new(
                alg,
                Arc::new(TrivialExtension),
            ))
        }
        "truncated-B2n" => {
            let n = param(params, "n", 1);
            if !(1..=4).contains(&n) {
                return Err(Error::Unsupported(format!("truncated-B2n with n = {n}")));
            }
            let n = n as usize;
            let vars: Vec<String> = (1..=n)
                .map(|i| format!("x{i}"))
                .chain((1..=n).map(|i| format!("y{i}")))
                .collect();
            let star = StarAlgebra::new(
                p,
                vars,
                (0..n).map(|i| (i, n + i, Scalar::ONE)),
                KernelMode::Onesided,
            )?;
            let full = star.restricted(&SuiteConfig::new(4, 0))?;
            quotient_restricted(&full, &MonomialIdeal::powers(2 * n, p.get()))
        }
        "sl2-sym" => symmetric_poisson(&RestrictedLieAlgebra::sl2(p)),
        "sl2-trunc" => truncated_symmetric(&RestrictedLieAlgebra::sl2(p)),
        other => Err(Error::UnknownCatalog(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    #[test]
    fn classical_values() {
        let a = catalog("classical2", f(3), &Params::new()).unwrap();
        let e = |s: &str| a.base().parse(s).unwrap();
        assert_eq!(a.pp(&e("x y")), e("x y"));
        assert!(a.pp(&e("x")).is_zero());
        assert!(a.pp(&e("x^3 + y^3")).is_zero());
    }

    #[test]
    fn trivial_extension_values() {
        let a = catalog("trivial-extension", f(3), &Params::new()).unwrap();
        let e = |s: &str| a.base().parse(s).unwrap();
        assert_eq!(a.pp(&e("y")), e("y"));
        assert!(a.pp(&e("x + 1")).is_zero());
        assert_eq!(a.pp(&e("x + 2 y")), e("x + 2 y"));
    }

    #[test]
    fn prime_and_name_errors() {
        assert!(matches!(
            catalog("classical2", f(5), &Params::new()),
            Err(Error::CatalogPrime {
                required: 3,
                got: 5,
                ..
            })
        ));
        assert!(matches!(
            catalog("nope", f(3), &Params::new()),
            Err(Error::UnknownCatalog(_))
        ));
        assert_eq!(default_prime("classical2-p5"), Some(5));
        assert_eq!(default_prime("sl2-sym"), Some(3));
    }

    #[test]
    fn every_entry_builds() {
        for (name, required) in CATALOG {
            let p = f(required.unwrap_or(3));
            let a = catalog(name, p, &Params::new()).unwrap();
            assert!(a.pp(&a.base().one()).is_zero(), "{name}");
        }
    }
}
