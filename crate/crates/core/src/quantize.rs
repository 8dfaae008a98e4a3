//! Star products for constant brackets, star powers and the p-map read off
//! from the `t^{p-1}` coefficient of `f^{⋆p}`.
//!
//! The kernel is `exp(t Σ κ_ij ∂_i ⊗ ∂_j)`. Each factor is expanded as
//! `Σ_k t^k κ_ij^k ∂_i^{(k)} ⊗ ∂_j^k` with a divided power on the left, so no
//! division by a factorial ever happens.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Poly, PrimeChar, Sampler, Scalar, TSeries};
use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::report::{Check, Report, SuiteConfig};
use crate::restricted::{PMapEval, RestrictedPoissonAlgebra};

/// How the coefficient matrix enters the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelMode {
    /// `Σ_{i<j} c_ij ∂_i ⊗ ∂_j`; the induced bracket is `{x_i, x_j} = c_ij`.
    Onesided,
    /// `Σ_{i≠j} c_ij ∂_i ⊗ ∂_j` with `c` antisymmetric; the induced bracket is
    /// `{x_i, x_j} = 2 c_ij`.
    Symmetric,
}

impl fmt::Display for KernelMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelMode::Onesided => "onesided",
            KernelMode::Symmetric => "symmetric",
        })
    }
}

impl std::str::FromStr for KernelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "onesided" => Ok(KernelMode::Onesided),
            "symmetric" => Ok(KernelMode::Symmetric),
            other => Err(Error::Unsupported(format!("kernel mode {other:?}"))),
        }
    }
}

/// A polynomial algebra with a star product truncated above `t^truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarAlgebra {
    p: PrimeChar,
    vars: Vec<String>,
    /// Upper-triangular entries `c_ij`, `i < j`.
    c: BTreeMap<(usize, usize), Scalar>,
    mode: KernelMode,
    truncation: usize,
    kernel: Vec<(usize, usize, Scalar)>,
}

impl StarAlgebra {
    /// `upper` lists `(i, j, c_ij)`; an entry with `i > j` stands for `c_ji = -c_ij`.
    pub fn new(
        p: PrimeChar,
        vars: Vec<String>,
        upper: impl IntoIterator<Item = (usize, usize, Scalar)>,
        mode: KernelMode,
    ) -> Result<Self> {
        let n = vars.len();
        let mut c = BTreeMap::new();
        for (i, j, v) in upper {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidTable(format!("coefficient index ({i}, {j})")));
            }
            let (key, v) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), p.neg(v))
            };
            if !v.is_zero() {
                c.insert(key, v);
            }
        }
        let mut kernel = Vec::new();
        for (&(i, j), &v) in &c {
            kernel.push((i, j, v));
            if mode == KernelMode::Symmetric {
                kernel.push((j, i, p.neg(v)));
            }
        }
        Ok(StarAlgebra {
            p,
            vars,
            c,
            mode,
            truncation: p.get() as usize,
            kernel,
        })
    }

    /// Two variables `x, y` with the onesided kernel `∂_x ⊗ ∂_y`.
    pub fn classical_plane(p: PrimeChar) -> Self {
        Self::new(
            p,
            vec!["x".into(), "y".into()],
            [(0, 1, Scalar::ONE)],
            KernelMode::Onesided,
        )
        .expect("valid table")
    }

    /// The star algebra whose classical limit is `alg`, which must have a
    /// constant bracket table and no quotient.
    pub fn from_poisson(alg: &PoissonAlgebra, mode: KernelMode) -> Result<Self> {
        if !alg.is_constant_table() {
            let ((i, j), v) = alg
                .table()
                .iter()
                .find(|(_, v)| !v.is_constant())
                .expect("a non-constant entry exists");
            return Err(Error::NonConstantTable(format!(
                "{{{}, {}}} = {}",
                alg.vars()[*i],
                alg.vars()[*j],
                alg.show(v)
            )));
        }
        if alg.has_quotient() {
            return Err(Error::Unsupported(
                "star products on quotient algebras".into(),
            ));
        }
        let p = alg.prime();
        let half = p.inv_int(2);
        let upper = alg.table().iter().map(|(&(i, j), v)| {
            let c = v.constant_term();
            (
                i,
                j,
                if mode == KernelMode::Symmetric {
                    p.mul(c, half)
                } else {
                    c
                },
            )
        });
        Self::new(p, alg.vars().to_vec(), upper, mode)
    }

    /// Changes the truncation; at least `p` so that `t^{p-1}` is kept.
    pub fn with_truncation(mut self, truncation: usize) -> Result<Self> {
        let p = self.p.get() as usize;
        if truncation < p {
            return Err(Error::OrderOutOfRange {
                n: truncation,
                reason: format!("truncation must be at least p = {p}"),
            });
        }
        self.truncation = truncation;
        Ok(self)
    }

    pub fn prime(&self) -> PrimeChar {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn mode(&self) -> KernelMode {
        self.mode
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `c_ij` for any `i, j`.
    pub fn coefficient(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.c.get(&(i, j)).copied().unwrap_or(Scalar::ZERO),
            std::cmp::Ordering::Greater => self.p.neg(self.coefficient(j, i)),
            std::cmp::Ordering::Equal => Scalar::ZERO,
        }
    }

    pub fn show(&self, f: &Poly) -> String {
        f.display(&self.vars).to_string()
    }

    pub fn show_series(&self, s: &TSeries) -> String {
        s.display(&self.vars).to_string()
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        let f = Poly::parse(self.p, &self.vars, s)?;
        Ok(f)
    }

    fn check_element(&self, f: &Poly) -> Result<()> {
        if f.prime() != self.p {
            return Err(Error::CharMismatch(self.p.get(), f.prime().get()));
        }
        if f.support_len() > self.nvars() {
            return Err(Error::ForeignElement(format!("{f:?}")));
        }
        Ok(())
    }

    /// The Poisson algebra recovered from the first-order commutator.
    pub fn classical_limit(&self) -> PoissonAlgebra {
        let p = self.p;
        let factor = match self.mode {
            KernelMode::Onesided => Scalar::ONE,
            KernelMode::Symmetric => p.scalar(2),
        };
        let table = self
            .c
            .iter()
            .map(|(&k, &v)| (k, Poly::constant(p, p.mul(v, factor))));
        PoissonAlgebra::new(p, self.vars.clone(), table, None)
            .expect("constant tables satisfy Jacobi")
    }

    /// `f ⋆ g`.
    pub fn star(&self, f: &Poly, g: &Poly) -> TSeries {
        let mut out = vec![Poly::zero(self.p); self.truncation + 1];
        if !f.is_zero() && !g.is_zero() {
            self.expand(0, f.clone(), g.clone(), 0, &mut out);
        }
        TSeries::from_coeffs(self.p, out, self.truncation)
    }

    /// Applies the kernel factors from index `at` on, accumulating into `out`.
    fn expand(&self, at: usize, f: Poly, g: Poly, degree: usize, out: &mut [Poly]) {
        if at == self.kernel.len() {
            out[degree] = &out[degree] + &(&f * &g);
            return;
        }
        let (i, j, kappa) = self.kernel[at];
        let mut k = 0u32;
        let mut gk = g;
        let mut weight = Scalar::ONE;
        while degree + k as usize <= self.truncation && !gk.is_zero() {
            let fk = f.divided_partial(i, k);
            if fk.is_zero() {
                break;
            }
            self.expand(at + 1, fk, gk.scale(weight), degree + k as usize, out);
            gk = gk.partial(j);
            weight = self.p.mul(weight, kappa);
            k += 1;
        }
    }

    /// The star product extended bilinearly to series.
    pub fn star_series(&self, a: &TSeries, b: &TSeries) -> Result<TSeries> {
        for s in [a, b] {
            if s.prime() != self.p {
                return Err(Error::CharMismatch(self.p.get(), s.prime().get()));
            }
            if s.truncation() != self.truncation {
                return Err(Error::TruncationMismatch(self.truncation, s.truncation()));
            }
        }
        let mut out = vec![Poly::zero(self.p); self.truncation + 1];
        for (i, x) in a.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs().iter().enumerate().take(self.truncation + 1 - i) {
                if y.is_zero() {
                    continue;
                }
                for (k, z) in self.star(x, y).coeffs().iter().enumerate() {
                    if i + j + k > self.truncation {
                        break;
                    }
                    out[i + j + k] = &out[i + j + k] + z;
                }
            }
        }
        Ok(TSeries::from_coeffs(self.p, out, self.truncation))
    }

    /// The left-associated power `((f ⋆ f) ⋆ f) ⋯`, `k ≥ 1` factors.
    pub fn star_power(&self, f: &Poly, k: usize) -> Result<TSeries> {
        self.check_element(f)?;
        if k == 0 {
            return Err(Error::OrderOutOfRange {
                n: 0,
                reason: "star powers start at 1".into(),
            });
        }
        let mut acc = TSeries::constant(f.clone(), self.truncation);
        for _ in 1..k {
            let mut out = vec![Poly::zero(self.p); self.truncation + 1];
            for (i, x) in acc.coeffs().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, z) in self.star(x, f).coeffs().iter().enumerate() {
                    if i + j > self.truncation {
                        break;
                    }
                    out[i + j] = &out[i + j] + z;
                }
            }
            acc = TSeries::from_coeffs(self.p, out, self.truncation);
        }
        Ok(acc)
    }

    /// `M_n^p(f)`, the coefficient of `t^n` in `f^{⋆p}`.
    pub fn extract_m(&self, f: &Poly, n: usize) -> Result<Poly> {
        if n > self.truncation {
            return Err(Error::OrderOutOfRange {
                n,
                reason: format!("above the truncation {}", self.truncation),
            });
        }
        Ok(self.star_power(f, self.p.get() as usize)?.coeff(n))
    }

    /// `M_1^p(f), ..., M_{p-1}^p(f)`.
    pub fn m_coefficients(&self, f: &Poly) -> Result<Vec<Poly>> {
        let p = self.p.get() as usize;
        let s = self.star_power(f, p)?;
        Ok((1..p).map(|n| s.coeff(n)).collect())
    }

    /// Checks `M_n^p(f) = 0` for `1 ≤ n ≤ p-2`, and that `f^p` star-commutes
    /// with sampled elements: `f^p ⋆ g = g ⋆ f^p = f^p g`.
    pub fn check_vanishing(&self, f: &Poly, cfg: &SuiteConfig) -> Report {
        let mut report = Report::for_config("vanishing", cfg);
        let p = self.p.get() as usize;
        let show = |g: &Poly| self.show(g);

        let mut low = Check::new("low-orders");
        match self.star_power(f, p) {
            Ok(s) => {
                for n in 1..=p.saturating_sub(2) {
                    let m = s.coeff(n);
                    low.record_eq(
                        m.is_zero(),
                        || vec![("f", show(f)), ("n", n.to_string())],
                        || show(&m),
                        || "0".into(),
                    );
                }
            }
            Err(e) => low.record_eq(
                false,
                || vec![("f", show(f))],
                || e.to_string(),
                String::new,
            ),
        }
        report.push(low);

        let mut central = Check::new("central-power");
        let fp = f.frobenius();
        let mut s = Sampler::new(self.p, cfg.seed);
        let mut others: Vec<Poly> = (0..self.nvars()).map(|i| Poly::var(self.p, i)).collect();
        others.extend((0..cfg.samples).map(|_| s.poly(self.nvars())));
        for g in &others {
            let want = TSeries::constant(&fp * g, self.truncation);
            let left = self.star(&fp, g);
            let right = self.star(g, &fp);
            central.record_eq(
                left == want && right == want,
                || vec![("f", show(f)), ("g", show(g))],
                || format!("{} ; {}", self.show_series(&left), self.show_series(&right)),
                || self.show_series(&want),
            );
        }
        report.push(central);
        report
    }

    /// The p-map `f ↦ M_{p-1}^p(f)`, after confirming the vanishing of the
    /// lower orders on the generators and on sampled elements.
    pub fn derive_pmap(&self, cfg: &SuiteConfig) -> Result<QuantizedPMap> {
        let mut s = Sampler::new(self.p, cfg.seed);
        let mut tests: Vec<Poly> = (0..self.nvars()).map(|i| Poly::var(self.p, i)).collect();
        tests.extend((0..cfg.samples).map(|_| s.poly(self.nvars())));
        let quick = SuiteConfig {
            samples: cfg.samples.min(4),
            ..*cfg
        };
        for f in &tests {
            let r = self.check_vanishing(f, &quick);
            let failed = r.failed_checks().next().cloned();
            if let Some(c) = failed {
                let w = c
                    .witness
                    .as_ref()
                    .map(|w| format!("{} != {}", w.lhs, w.rhs));
                return Err(Error::VanishingFailure(format!(
                    "{} fails for f = {}: {}",
                    c.name,
                    self.show(f),
                    w.unwrap_or_default()
                )));
            }
        }
        Ok(QuantizedPMap { star: self.clone() })
    }

    /// The classical limit together with the quantization-derived p-map.
    pub fn restricted(&self, cfg: &SuiteConfig) -> Result<RestrictedPoissonAlgebra> {
        let pm = self.derive_pmap(cfg)?;
        Ok(RestrictedPoissonAlgebra::new(
            Arc::new(self.classical_limit()),
            Arc::new(pm),
        ))
    }
}

/// `f ↦ M_{p-1}^p(f)` for a fixed star algebra.
#[derive(Clone, Debug)]
pub struct QuantizedPMap {
    star: StarAlgebra,
}

impl QuantizedPMap {
    pub fn star_algebra(&self) -> &StarAlgebra {
        &self.star
    }
}

impl PMapEval for QuantizedPMap {
    fn eval(&self, f: &Poly) -> Poly {
        let p = self.star.prime().get() as usize;
        self.star
            .extract_m(f, p - 1)
            .expect("f belongs to the star algebra")
    }
}
