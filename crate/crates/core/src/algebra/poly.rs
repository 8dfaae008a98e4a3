//! Sparse multivariate polynomials over `F_p`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{PrimeChar, Scalar};
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A polynomial stored as terms sorted ascending in graded-lex order, with
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: PrimeChar,
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero(p: PrimeChar) -> Self {
        Poly {
            p,
            terms: Vec::new(),
        }
    }

    pub fn one(p: PrimeChar) -> Self {
        Self::constant(p, Scalar::ONE)
    }

    pub fn constant(p: PrimeChar, c: Scalar) -> Self {
        Self::term(p, Monomial::one(), c)
    }

    pub fn int(p: PrimeChar, c: i64) -> Self {
        Self::constant(p, p.scalar(c))
    }

    pub fn var(p: PrimeChar, i: usize) -> Self {
        Self::term(p, Monomial::var(i), Scalar::ONE)
    }

    pub fn term(p: PrimeChar, m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero(p)
        } else {
            Poly {
                p,
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats.
    pub fn from_terms(p: PrimeChar, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(Scalar::ZERO);
            *e = p.add(*e, c);
        }
        Self::from_map(p, acc)
    }

    fn from_map(p: PrimeChar, acc: HashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { p, terms }
    }

    pub fn prime(&self) -> PrimeChar {
        self.p
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1,
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    /// One past the largest variable index that occurs.
    pub fn support_len(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.support_len())
            .max()
            .unwrap_or(0)
    }

    /// Whether every term has degree exactly `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub fn same_char(&self, other: &Poly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::CharMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    fn assert_same_char(&self, other: &Poly) {
        assert_eq!(self.p, other.p, "characteristic mismatch");
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.same_char(other)?;
        Ok(self.add_ref(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_char(other)?;
        Ok(self.mul_ref(other))
    }

    fn add_ref(&self, other: &Poly) -> Poly {
        self.assert_same_char(other);
        let p = self.p;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = p.add(a[i].1, b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { p, terms: out }
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        self.assert_same_char(other);
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(p);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, *c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, *c);
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(Scalar::ZERO);
                *e = p.add(*e, p.mul(*ca, *cb));
            }
        }
        Self::from_map(p, acc)
    }

    /// Multiplication by `c * m`; preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p;
        Poly {
            p,
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), p.mul(*d, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p;
        Poly {
            p,
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), p.mul(*d, c)))
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(self.p.scalar(c))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f^p`, computed termwise since Frobenius is additive and fixes `F_p`.
    pub fn frobenius(&self) -> Poly {
        let p = self.p.get();
        let terms = self.terms.iter().map(|(m, c)| (m.pow(p), *c)).collect();
        Poly { p: self.p, terms }
    }

    /// Ordinary partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        self.partial_n(i, 1)
    }

    /// `∂^k f / ∂x_i^k`.
    pub fn partial_n(&self, i: usize, k: u32) -> Poly {
        let p = self.p;
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e < k {
                continue;
            }
            // falling factorial e (e-1) ... (e-k+1)
            let f = (0..k).fold(Scalar::ONE, |acc, j| p.mul(acc, p.scalar((e - j) as i64)));
            let c = p.mul(*c, f);
            if !c.is_zero() {
                out.push((m.lower(i, k).expect("exponent checked"), c));
            }
        }
        Self::from_terms(p, out)
    }

    /// Divided derivative `∂^{(k)}` sending `x_i^e` to `C(e, k) x_i^{e-k}`.
    pub fn divided_partial(&self, i: usize, k: u32) -> Poly {
        let p = self.p;
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e < k {
                continue;
            }
            let c = p.mul(*c, p.binomial(e as u64, k as u64));
            if !c.is_zero() {
                out.push((m.lower(i, k).expect("exponent checked"), c));
            }
        }
        Self::from_terms(p, out)
    }

    /// Applies a monomial map termwise.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        Self::from_terms(self.p, self.terms.iter().map(|(m, c)| (f(m), *c)))
    }

    pub fn shift(&self, offset: usize) -> Poly {
        // shifting preserves the relative order
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.shift(offset), *c))
            .collect();
        Poly { p: self.p, terms }
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let p = self.p;
        let mut acc = Poly::zero(p);
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(p, *c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u64))
                    .clone();
                t = &t * &pw;
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> PolyDisplay<'a, S> {
        PolyDisplay { f: self, names }
    }

    /// Parses a polynomial over the given variable names.
    ///
    /// Accepts integers, variables, `+`, `-`, `*`, `^` with a nonnegative
    /// integer exponent, division by an integer prime to `p`, parentheses and
    /// implicit multiplication (`2x y`).
    pub fn parse<S: AsRef<str>>(p: PrimeChar, names: &[S], input: &str) -> Result<Poly> {
        let mut parser = Parser {
            p,
            names,
            src: input.as_bytes(),
            pos: 0,
        };
        let f = parser.expr()?;
        parser.skip_ws();
        if parser.pos < parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 0] = [];
        write!(f, "{}", self.display(&names))
    }
}

pub struct PolyDisplay<'a, S> {
    f: &'a Poly,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for PolyDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.f.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == Scalar::ONE {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{c}*{}", m.display(self.names))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(&self, rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Poly, b: &Poly| a.add_ref(b));
binop!(Sub, sub, |a: &Poly, b: &Poly| a.add_ref(&-b));
binop!(Mul, mul, |a: &Poly, b: &Poly| a.mul_ref(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let p = self.p;
        Poly {
            p,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), p.neg(*c)))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(mut iter: I) -> Poly {
        let first = iter
            .next()
            .expect("sum of an empty iterator has no characteristic");
        iter.fold(first, |a, b| a + b)
    }
}

struct Parser<'a, S> {
    p: PrimeChar,
    names: &'a [S],
    src: &'a [u8],
    pos: usize,
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    /// Reads an identifier as one variable or, failing that, as a
    /// juxtaposition of variables such as `xy`.
    fn split_names(&self, name: &str) -> Option<Vec<usize>> {
        if name.is_empty() {
            return Some(Vec::new());
        }
        if let Some(i) = self.names.iter().position(|n| n.as_ref() == name) {
            return Some(vec![i]);
        }
        let mut candidates: Vec<(usize, usize)> = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.as_ref().is_empty() && name.starts_with(n.as_ref()))
            .map(|(i, n)| (n.as_ref().len(), i))
            .collect();
        candidates.sort_unstable_by(|a, b| b.cmp(a));
        candidates.into_iter().find_map(|(len, i)| {
            let mut rest = self.split_names(&name[len..])?;
            rest.insert(0, i);
            Some(rest)
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let start = self.pos;
                    let d = self.integer()?;
                    let d = self.p.scalar(d);
                    let inv = self.p.inv(d).ok_or(Error::Parse {
                        offset: start,
                        message: "division by a multiple of p".into(),
                    })?;
                    acc = acc.scale(inv);
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| Error::Parse {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e as u64));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_mod_p()?;
                Ok(Poly::constant(self.p, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() {
                    let c = self.src[self.pos];
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.split_names(name).and_then(|v| v.first().copied()) {
                    Some(i) => {
                        // juxtaposed names such as `xy`: consume only the first
                        self.pos = start + self.names[i].as_ref().len();
                        Ok(Poly::var(self.p, i))
                    }
                    None => Err(Error::Parse {
                        offset: start,
                        message: format!("unknown variable {name:?}"),
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&[u8]> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        let d = self.digits()?;
        std::str::from_utf8(d)
            .expect("ascii")
            .parse()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "integer too large".into(),
            })
    }

    fn integer_mod_p(&mut self) -> Result<Scalar> {
        let p = self.p;
        let d = self.digits()?;
        Ok(d.iter().fold(Scalar::ZERO, |acc, &c| {
            p.add(p.mul(acc, p.scalar(10)), p.scalar((c - b'0') as i64))
        }))
    }
}
