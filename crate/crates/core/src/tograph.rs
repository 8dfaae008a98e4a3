//! Totally ordered graphs ("tographs") on the vertices `1..=p` and the
//! combinatorial expansion of the star power coefficients `M_n^p`.
//!
//! In the two-variable onesided star product, `f^{⋆p}` expands as a sum over
//! tuples `(i_1..i_n; j_1..j_n)` with `i_t < j_t`, each contributing the
//! product over vertices `v` of `∂_x^{d⁻(v)} ∂_y^{d⁺(v)} f`, where `d⁻` counts
//! edges leaving `v` and `d⁺` edges entering it. Two tographs whose connected
//! components match up under order-preserving relabelings contribute equal
//! weights, and for `n ≤ p - 2` every such class has a size divisible by `p`.
//!
//! Equal weights do not force equivalence: at `p = 5` the edge sets
//! `{12, 13, 24}` and `{12, 13, 34}` have the same degree data, hence the same
//! weight, but their components are not order-isomorphic.

use std::collections::BTreeMap;

use crate::algebra::{Poly, PrimeChar};
use crate::error::{Error, Result};
use crate::report::{Check, Report, SuiteConfig};

/// An edge multiset on the vertices `1..=p`, every edge pointing upward.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tograph {
    p: u32,
    edges: Vec<(u32, u32)>,
}

impl Tograph {
    pub fn new(p: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| !(1 <= i && i < j && j <= p)) {
            return Err(Error::InvalidTable(format!(
                "edge ({i}, {j}) on vertices 1..={p}"
            )));
        }
        edges.sort_unstable();
        Ok(Tograph { p, edges })
    }

    /// The tograph of a tuple `(i_1..i_n; j_1..j_n)` given as pairs.
    pub fn from_tuple(p: u32, tuple: &[(u32, u32)]) -> Result<Self> {
        Self::new(p, tuple.iter().copied())
    }

    pub fn vertex_count(&self) -> u32 {
        self.p
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// `(out-degree, in-degree)` of each vertex `1..=p`.
    pub fn degrees(&self) -> Vec<(u32, u32)> {
        let mut d = vec![(0, 0); self.p as usize];
        for &(i, j) in &self.edges {
            d[i as usize - 1].0 += 1;
            d[j as usize - 1].1 += 1;
        }
        d
    }

    /// `n! / Π ν(u,v)!`: the number of tuples in `Γ_n` with this edge multiset.
    pub fn tuple_count(&self) -> u128 {
        let mut runs: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for e in &self.edges {
            *runs.entry(*e).or_default() += 1;
        }
        let denom: u128 = runs.values().map(|&k| factorial(k)).product();
        factorial(self.edges.len() as u32) / denom
    }
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// All tuples `((i_1, j_1), ..., (i_n, j_n))` with `1 ≤ i_t < j_t ≤ p`, in
/// lexicographic order; there are `C(p, 2)^n` of them.
pub fn enumerate_gamma(n: usize, p: u32) -> impl Iterator<Item = Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (1..=p)
        .flat_map(|i| (i + 1..=p).map(move |j| (i, j)))
        .collect();
    let m = pairs.len();
    let mut idx = vec![0usize; n];
    let mut done = m == 0 && n > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item = idx.iter().map(|&k| pairs[k]).collect();
        done = true;
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < m {
                done = false;
                break;
            }
            *slot = 0;
        }
        Some(item)
    })
}

/// Every edge multiset of size `n` on `1..=p`, each once, in sorted order.
pub fn edge_multisets(n: usize, p: u32) -> Vec<Tograph> {
    let pairs: Vec<(u32, u32)> = (1..=p)
        .flat_map(|i| (i + 1..=p).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(
        start: usize,
        left: usize,
        pairs: &[(u32, u32)],
        cur: &mut Vec<(u32, u32)>,
        p: u32,
        out: &mut Vec<Tograph>,
    ) {
        if left == 0 {
            out.push(Tograph {
                p,
                edges: cur.clone(),
            });
            return;
        }
        for k in start..pairs.len() {
            cur.push(pairs[k]);
            rec(k, left - 1, pairs, cur, p, out);
            cur.pop();
        }
    }
    rec(0, n, &pairs, &mut cur, p, &mut out);
    out
}

/// `Π_v ∂_x^{d⁻(v)} ∂_y^{d⁺(v)} f` for `f` in the two variables `x, y`.
pub fn graph_weight(g: &Tograph, f: &Poly) -> Result<Poly> {
    if f.support_len() > 2 {
        return Err(Error::ForeignElement(
            "tograph weights need f in two variables".into(),
        ));
    }
    let p = f.prime();
    let mut acc = Poly::one(p);
    for (out, inn) in g.degrees() {
        let factor = f.partial_n(0, out).partial_n(1, inn);
        if factor.is_zero() {
            return Ok(Poly::zero(p));
        }
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// A connected component relabeled order-preservingly onto `1..=size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSignature {
    pub size: u32,
    pub edges: Vec<(u32, u32)>,
}

/// Isomorphism types of components with their multiplicities `k_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentProfile {
    pub p: u32,
    pub components: Vec<(ComponentSignature, u32)>,
}

impl ComponentProfile {
    /// Number of components, counting multiplicity.
    pub fn component_count(&self) -> u32 {
        self.components.iter().map(|(_, k)| k).sum()
    }

    pub fn describe(&self) -> String {
        self.components
            .iter()
            .map(|(sig, k)| {
                let edges: Vec<String> = sig.edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
                format!("[{}: {}] x{k}", sig.size, edges.join(" "))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// The multiset of canonical components of `g`.
pub fn equivalence_class(g: &Tograph) -> ComponentProfile {
    let n = g.p as usize;
    let mut parent: Vec<usize> = (0..n).collect();
    for &(i, j) in &g.edges {
        let (a, b) = (
            find(&mut parent, i as usize - 1),
            find(&mut parent, j as usize - 1),
        );
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v as u32 + 1);
    }
    let mut counts: BTreeMap<ComponentSignature, u32> = BTreeMap::new();
    for vertices in groups.values() {
        let pos = |v: u32| vertices.binary_search(&v).expect("vertex in component") as u32 + 1;
        let mut edges: Vec<(u32, u32)> = g
            .edges
            .iter()
            .filter(|(i, _)| vertices.binary_search(i).is_ok())
            .map(|&(i, j)| (pos(i), pos(j)))
            .collect();
        edges.sort_unstable();
        *counts
            .entry(ComponentSignature {
                size: vertices.len() as u32,
                edges,
            })
            .or_default() += 1;
    }
    ComponentProfile {
        p: g.p,
        components: counts.into_iter().collect(),
    }
}

/// `N = p! / (Π_i (n_i!)^{k_i} k_i!)`, the number of tographs with this profile,
/// as an exact integer.
pub fn count_equivalent(profile: &ComponentProfile) -> Result<u128> {
    let total: u32 = profile.components.iter().map(|(s, k)| s.size * k).sum();
    if total != profile.p {
        return Err(Error::InconsistentProfile {
            p: profile.p as usize,
            total: total as usize,
        });
    }
    let mut denom: u128 = 1;
    for (sig, k) in &profile.components {
        denom *= factorial(sig.size).pow(*k) * factorial(*k);
    }
    Ok(factorial(profile.p) / denom)
}

/// One equivalence class of edge multisets with `n` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub profile: ComponentProfile,
    /// `N` from the counting formula.
    pub size: u128,
    /// Distinct edge multisets found in the class.
    pub members: u128,
    /// Tuples of `Γ_n` mapping into the class.
    pub tuples: u128,
    pub multiplicity_free: bool,
}

/// Groups all edge multisets with `n` edges on `1..=p` into equivalence classes.
pub fn class_census(n: usize, p: u32) -> Vec<ClassInfo> {
    let mut classes: BTreeMap<ComponentProfile, ClassInfo> = BTreeMap::new();
    for g in edge_multisets(n, p) {
        let profile = equivalence_class(&g);
        let tuples = g.tuple_count();
        let free = g.edges.windows(2).all(|w| w[0] != w[1]);
        let entry = classes.entry(profile.clone()).or_insert_with(|| ClassInfo {
            size: count_equivalent(&profile).expect("profile of a tograph is consistent"),
            profile,
            members: 0,
            tuples: 0,
            multiplicity_free: free,
        });
        entry.members += 1;
        entry.tuples += tuples;
    }
    classes.into_values().collect()
}

fn check_order(n: usize, p: PrimeChar, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::OrderOutOfRange {
            n,
            reason: format!("need 1 <= n <= {max} for p = {}", p.get()),
        });
    }
    Ok(())
}

/// `M_n^p(f) = (1/n!) Σ_{Γ_n} weight`, summing over edge multisets with
/// multiplicity `n!/Π ν!`. Requires `1 ≤ n ≤ p - 1`.
pub fn combinatorial_m(f: &Poly, n: usize, p: PrimeChar) -> Result<Poly> {
    check_order(n, p, p.get() as usize - 1)?;
    if f.prime() != p {
        return Err(Error::CharMismatch(p.get(), f.prime().get()));
    }
    let mut acc = Poly::zero(p);
    for g in edge_multisets(n, p.get()) {
        let mult = p.scalar((g.tuple_count() % p.get() as u128) as i64);
        if mult.is_zero() {
            continue;
        }
        acc = acc + graph_weight(&g, f)?.scale(mult);
    }
    let inv = p.inv(p.factorial(n as u64)).expect("n < p");
    Ok(acc.scale(inv))
}

/// Certifies `M_n^p = 0` for `1 ≤ n ≤ p - 2` without reference to `f`: every
/// class is disconnected and has a size divisible by `p`, the class sizes
/// match the counting formula, and the classes partition `Γ_n`.
pub fn vanishing_certificate(n: usize, p: PrimeChar) -> Result<Report> {
    check_order(n, p, p.get() as usize - 2)?;
    let pv = p.get();
    let census = class_census(n, pv);
    let mut report = Report::new(format!("vanishing-certificate(p={pv}, n={n})"), 0, 0);

    let show = |c: &ClassInfo| c.profile.describe();
    let mut disconnected = Check::new("disconnected");
    let mut divisible = Check::new("class-size-divisible");
    let mut sizes = Check::new("class-size-formula");
    for c in &census {
        disconnected.record_eq(
            c.profile.component_count() >= 2,
            || vec![("class", show(c))],
            || c.profile.component_count().to_string(),
            || ">= 2".into(),
        );
        divisible.record_eq(
            c.size % pv as u128 == 0,
            || vec![("class", show(c))],
            || format!("N = {}", c.size),
            || format!("0 mod {pv}"),
        );
        sizes.record_eq(
            c.members == c.size,
            || vec![("class", show(c))],
            || c.members.to_string(),
            || c.size.to_string(),
        );
    }
    report.push(disconnected);
    report.push(divisible);
    report.push(sizes);

    let mut partition = Check::new("partition");
    let total: u128 = census.iter().map(|c| c.tuples).sum();
    let pairs = (pv as u128 * (pv as u128 - 1)) / 2;
    let expected = pairs.pow(n as u32);
    partition.record_eq(
        total == expected,
        || vec![("n", n.to_string())],
        || total.to_string(),
        || expected.to_string(),
    );
    report.push(partition);

    let census_note = format!(
        "{} classes over {} edge multisets",
        census.len(),
        census.iter().map(|c| c.members).sum::<u128>()
    );
    report.push(Check::new("census").informational().with_note(census_note));
    Ok(report)
}

/// Compares `combinatorial_m` with the star power coefficients on random
/// two-variable polynomials for every `1 ≤ n ≤ p - 1`.
pub fn oracle_report(p: PrimeChar, fs: &[Poly], cfg: &SuiteConfig) -> Report {
    let star = crate::quantize::StarAlgebra::classical_plane(p);
    let mut report = Report::for_config("tograph-oracle", cfg);
    let mut check = Check::new("combinatorial-equals-star");
    for f in fs {
        let series = star.star_power(f, p.get() as usize);
        for n in 1..p.get() as usize {
            let lhs = combinatorial_m(f, n, p);
            let rhs = series.as_ref().map(|s| s.coeff(n)).map_err(Clone::clone);
            let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
            let render = |r: Result<&Poly, &Error>| match r {
                Ok(v) => star.show(v),
                Err(e) => e.to_string(),
            };
            check.record_eq(
                ok,
                || vec![("f", star.show(f)), ("n", n.to_string())],
                || render(lhs.as_ref()),
                || render(rhs.as_ref()),
            );
        }
    }
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantize::StarAlgebra;

    fn f3() -> PrimeChar {
        PrimeChar::new(3).unwrap()
    }

    #[test]
    fn gamma_sizes() {
        let one: Vec<_> = enumerate_gamma(1, 3).collect();
        assert_eq!(one, vec![vec![(1, 2)], vec![(1, 3)], vec![(2, 3)]]);
        assert_eq!(enumerate_gamma(2, 3).count(), 9);
        assert_eq!(enumerate_gamma(1, 5).count(), 10);
        assert_eq!(enumerate_gamma(3, 5).count(), 1000);
    }

    #[test]
    fn multisets_cover_gamma() {
        for (n, p) in [(1, 3), (2, 3), (2, 5), (3, 5)] {
            let total: u128 = edge_multisets(n, p).iter().map(Tograph::tuple_count).sum();
            assert_eq!(total, enumerate_gamma(n, p).count() as u128);
        }
    }

    #[test]
    fn weights() {
        let p = f3();
        let names = ["x", "y"];
        let f = Poly::parse(p, &names, "x^2 y^2 + x y + y").unwrap();
        let (fx, fy) = (f.partial(0), f.partial(1));
        let g = Tograph::new(3, [(1, 2)]).unwrap();
        assert_eq!(graph_weight(&g, &f).unwrap(), &(&fx * &fy) * &f);
        let empty = Tograph::new(3, []).unwrap();
        assert_eq!(graph_weight(&empty, &f).unwrap(), f.pow(3));
        let double = Tograph::new(3, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(
            graph_weight(&double, &f).unwrap(),
            &(&f.partial_n(0, 2) * &f.partial_n(1, 2)) * &f
        );
    }

    #[test]
    fn profiles_and_counts() {
        let a = equivalence_class(&Tograph::new(3, [(1, 2)]).unwrap());
        let b = equivalence_class(&Tograph::new(3, [(2, 3)]).unwrap());
        assert_eq!(a, b);
        assert_eq!(count_equivalent(&a).unwrap(), 3);
        let empty = equivalence_class(&Tograph::new(3, []).unwrap());
        assert_eq!(empty.components.len(), 1);
        assert_eq!(empty.components[0].1, 3);
        assert_eq!(count_equivalent(&empty).unwrap(), 1);
        let c = equivalence_class(&Tograph::new(5, [(1, 2), (3, 4)]).unwrap());
        let d = equivalence_class(&Tograph::new(5, [(1, 3), (2, 4)]).unwrap());
        assert_eq!(c, d);
        assert_eq!(count_equivalent(&c).unwrap(), 15);
        let mut bad = c.clone();
        bad.p = 6;
        assert_eq!(
            count_equivalent(&bad),
            Err(Error::InconsistentProfile { p: 6, total: 5 })
        );
    }

    #[test]
    fn equal_weights_without_equivalence() {
        let p = PrimeChar::new(5).unwrap();
        let g = Tograph::new(5, [(1, 2), (1, 3), (2, 4)]).unwrap();
        let h = Tograph::new(5, [(1, 2), (1, 3), (3, 4)]).unwrap();
        assert_ne!(equivalence_class(&g), equivalence_class(&h));
        let f = Poly::parse(p, &["x", "y"], "x^3 y + 2 x y^2 + y^3 + x").unwrap();
        assert_eq!(graph_weight(&g, &f).unwrap(), graph_weight(&h, &f).unwrap());
    }

    #[test]
    fn small_combinatorial_coefficients() {
        let p = f3();
        let s = StarAlgebra::classical_plane(p);
        let xy = s.parse("x y").unwrap();
        assert!(combinatorial_m(&xy, 1, p).unwrap().is_zero());
        assert_eq!(combinatorial_m(&xy, 2, p).unwrap(), xy);
        assert!(combinatorial_m(&xy, 3, p).is_err());
        let only_y = s.parse("y^2 + y").unwrap();
        assert!(combinatorial_m(&only_y, 1, p).unwrap().is_zero());
    }

    #[test]
    fn certificates() {
        let r = vanishing_certificate(1, f3()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(class_census(1, 3).len(), 1);
        assert_eq!(class_census(1, 3)[0].size, 3);
        assert!(vanishing_certificate(2, PrimeChar::new(5).unwrap())
            .unwrap()
            .passed());
        assert!(vanishing_certificate(2, f3()).is_err());
    }
}
