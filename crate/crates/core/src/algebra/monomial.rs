use std::fmt;

use smallvec::SmallVec;

/// A monomial `x_0^{e_0} x_1^{e_1} ...` stored as an exponent vector with
/// trailing zeros trimmed, so equal monomials have equal representations.
///
/// The derived order compares total degree first and then the exponent
/// vectors lexicographically, which is graded-lex with `x_0 > x_1 > ...`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u32; 4]>,
}

fn checked_sum(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("monomial exponent overflow")
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut exps: SmallVec<[u32; 4]> = SmallVec::from_elem(0, i + 1);
        exps[i] = e;
        Monomial { degree: e, exps }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_slice(exps);
        while v.last() == Some(&0) {
            v.pop();
        }
        let degree = v.iter().fold(0u32, |a, &b| checked_sum(a, b));
        Monomial { degree, exps: v }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// Exponents up to the last nonzero one.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// One past the largest variable index that occurs.
    pub fn support_len(&self) -> usize {
        self.exps.len()
    }

    /// Smallest variable index with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, &s) in exps.iter_mut().zip(short.exps.iter()) {
            *e = checked_sum(*e, s);
        }
        Monomial {
            degree: checked_sum(self.degree, other.degree),
            exps,
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial {
            degree: self
                .degree
                .checked_mul(k)
                .expect("monomial exponent overflow"),
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, &o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= o;
        }
        Some(Monomial::from_exponents(&exps))
    }

    /// Lowers the exponent of variable `i` by `k`; `None` if it is smaller than `k`.
    pub fn lower(&self, i: usize, k: u32) -> Option<Monomial> {
        let e = self.exponent(i);
        if e < k {
            return None;
        }
        if k == 0 {
            return Some(self.clone());
        }
        let mut exps = self.exps.clone();
        exps[i] -= k;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial {
            degree: self.degree - k,
            exps,
        })
    }

    /// Renames variable `i` to `i + offset`.
    pub fn shift(&self, offset: usize) -> Monomial {
        if self.is_one() {
            return self.clone();
        }
        let mut exps: SmallVec<[u32; 4]> = SmallVec::from_elem(0, offset);
        exps.extend_from_slice(&self.exps);
        Monomial {
            degree: self.degree,
            exps,
        }
    }

    /// Splits into the part on variables `< at` and the part on `>= at`
    /// (the latter renamed down by `at`).
    pub fn split(&self, at: usize) -> (Monomial, Monomial) {
        if self.exps.len() <= at {
            return (self.clone(), Monomial::one());
        }
        (
            Monomial::from_exponents(&self.exps[..at]),
            Monomial::from_exponents(&self.exps[at..]),
        )
    }

    /// Applies `map` to the variable indices; the map must be injective.
    pub fn rename(&self, map: impl Fn(usize) -> usize) -> Monomial {
        let mut out: SmallVec<[u32; 4]> = SmallVec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = map(i);
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            out[j] += e;
        }
        Monomial::from_exponents(&out)
    }

    /// All monomials in `nvars` variables of total degree at most `max_degree`,
    /// in ascending graded-lex order.
    pub fn all_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, max_degree, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> MonomialDisplay<'a, S> {
        MonomialDisplay { m: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

pub struct MonomialDisplay<'a, S> {
    m: &'a Monomial,
    names: &'a [S],
}

pub(crate) fn var_name<S: AsRef<str>>(names: &[S], i: usize) -> String {
    names
        .get(i)
        .map(|s| s.as_ref().to_string())
        .unwrap_or_else(|| format!("x{i}"))
}

impl<S: AsRef<str>> fmt::Display for MonomialDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", var_name(self.names, i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
