//! Uniform hypergraphs, `i`-degrees and clique bounds weighted by the real
//! size function `x`.
//!
//! `x(I)` is the root of `d(I) = C(x - i, q - i)`. Because `x(I)` increases
//! with `d(I)`, the size `x(T)` of a clique is determined by the largest
//! `i`-degree inside it, so sums are grouped by that degree. When every root
//! involved is an integer the sum is exact; otherwise it is evaluated in
//! floating point and near-ties are settled with rational root brackets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bitset::{subsets_of_size, VertexSet};
use crate::cliques::count_cliques;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::rational::{binom_q, gen_binom, gen_binom_f64, ExactRational};
use crate::real::{bracket_gen_binom_root, RealValue, RootBracket, NEAR_TIE};
use crate::verify::{Params, Status, TheoremId, Value, VerificationReport};

/// A `q`-uniform hypergraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UniformHypergraph {
    n: usize,
    q: usize,
    edges: Vec<VertexSet>,
}

impl UniformHypergraph {
    pub fn new(n: usize, q: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            let s = VertexSet::from_slice(e);
            if s.len() != e.len() {
                return Err(Error::Hypergraph(format!("edge {e:?} repeats a vertex")));
            }
            sets.push(s);
        }
        UniformHypergraph::from_sets(n, q, sets)
    }

    pub fn from_sets(n: usize, q: usize, mut edges: Vec<VertexSet>) -> Result<Self> {
        if n > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if q == 0 {
            return Err(Error::Hypergraph("uniformity must be positive".into()));
        }
        for e in &edges {
            if e.len() != q {
                return Err(Error::Hypergraph(format!("edge {e} does not have {q} vertices")));
            }
            if e.last().is_some_and(|v| v >= n) {
                return Err(Error::Hypergraph(format!("edge {e} uses a vertex outside 0..{n}")));
            }
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::Hypergraph("duplicate edge".into()));
        }
        Ok(UniformHypergraph { n, q, edges })
    }

    /// The Fano plane: seven points, seven lines, every pair on one line.
    pub fn fano() -> Self {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let edges: Vec<Vec<usize>> = lines.iter().map(|l| l.to_vec()).collect();
        UniformHypergraph::new(7, 3, &edges).expect("Fano lines are valid")
    }

    /// `K_n^{(q)}`.
    pub fn complete(n: usize, q: usize) -> Result<Self> {
        UniformHypergraph::from_sets(n, q, subsets_of_size(VertexSet::range(n), q))
    }

    /// A graph as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().into_iter().map(|(a, b)| VertexSet::from_slice(&[a, b])).collect();
        UniformHypergraph::from_sets(g.n(), 2, edges).expect("graph edges are 2-sets")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges containing `i_set`, for `1 <= |i_set| < q`.
    pub fn i_degree(&self, i_set: VertexSet) -> Result<usize> {
        let i = i_set.len();
        if i == 0 || i >= self.q {
            return Err(invalid(format!("i-degree needs 1 <= |I| < q = {} (|I| = {i})", self.q)));
        }
        if i_set.last().is_some_and(|v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: i_set.last().unwrap(), n: self.n });
        }
        Ok(self.i_degree_unchecked(i_set))
    }

    fn i_degree_unchecked(&self, i_set: VertexSet) -> usize {
        self.edges.iter().filter(|e| i_set.is_subset(**e)).count()
    }

    /// `Delta_i`: the largest `i`-degree over all `i`-sets.
    pub fn max_i_degree(&self, i: usize) -> Result<usize> {
        if i == 0 || i >= self.q {
            return Err(invalid(format!("max i-degree needs 1 <= i < q = {}", self.q)));
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for e in &self.edges {
            for s in subsets_of_size(*e, i) {
                *counts.entry(s.bits()).or_default() += 1;
            }
        }
        Ok(counts.values().copied().max().unwrap_or(0))
    }

    /// Vertex sets of all `t`-cliques in lexicographic order.
    pub fn cliques(&self, t: usize) -> Result<Vec<VertexSet>> {
        enumerate_hypercliques(self, t)
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:", self.n, self.q)?;
        let mut edges: Vec<Vec<usize>> = self.edges.iter().map(|e| e.to_vec()).collect();
        edges.sort_unstable();
        for e in edges {
            write!(f, "{}", e.into_iter().collect::<VertexSet>())?;
        }
        Ok(())
    }
}

/// `x >= q - 1` with `d = C(x - i, q - i)`, by bisection to `1e-12`.
pub fn solve_x(d: u64, i: usize, q: usize) -> f64 {
    let k = (q - i) as u64;
    let left = k as f64 - 1.0;
    if d == 0 || k == 0 {
        return left + i as f64;
    }
    let target = d as f64;
    let mut lo = left;
    let mut hi = left + 1.0;
    while gen_binom_f64(hi, k) < target {
        lo = hi;
        hi = 2.0 * hi + 1.0;
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gen_binom_f64(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi) + i as f64
}

/// Rational enclosure of `x` with `d = C(x - i, q - i)`.
pub fn bracket_x(d: u64, i: usize, q: usize, bits: u32) -> RootBracket {
    bracket_gen_binom_root(d, (q - i) as u64, bits).shift(&ExactRational::from(i))
}

/// Every `t`-set all of whose `q`-subsets are edges.
pub fn enumerate_hypercliques(h: &UniformHypergraph, t: usize) -> Result<Vec<VertexSet>> {
    if t < h.q {
        return Err(invalid(format!("hypergraph cliques need t >= q ({t} < {})", h.q)));
    }
    fn rec(h: &UniformHypergraph, t: usize, current: VertexSet, next: usize, out: &mut Vec<VertexSet>) {
        if current.len() == t {
            out.push(current);
            return;
        }
        for v in next..h.n {
            if h.n - v < t - current.len() {
                break;
            }
            let ok = current.len() + 1 < h.q
                || subsets_of_size(current, h.q - 1).into_iter().all(|s| h.contains_edge(s.with(v)));
            if ok {
                rec(h, t, current.with(v), v + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(h, t, VertexSet::EMPTY, 0, &mut out);
    Ok(out)
}

/// The size data of one hypergraph clique.
#[derive(Clone, Debug, PartialEq)]
pub struct HypercliqueProfile {
    pub clique: VertexSet,
    pub x_values: Vec<(VertexSet, f64)>,
    pub x_of_t: f64,
}

pub fn hyperclique_profile(h: &UniformHypergraph, clique: VertexSet, i: usize) -> Result<HypercliqueProfile> {
    let mut x_values = Vec::new();
    for s in subsets_of_size(clique, i) {
        x_values.push((s, solve_x(h.i_degree(s)? as u64, i, h.q)));
    }
    let x_of_t = x_values.iter().map(|(_, x)| *x).fold(f64::NEG_INFINITY, f64::max);
    Ok(HypercliqueProfile { clique, x_values, x_of_t })
}

/// Number of `t`-cliques grouped by the largest `i`-degree inside them.
fn cliques_by_degree(h: &UniformHypergraph, t: usize, i: usize) -> Result<BTreeMap<u64, usize>> {
    let mut degree_of: BTreeMap<u64, usize> = BTreeMap::new();
    let mut groups: BTreeMap<u64, usize> = BTreeMap::new();
    for c in enumerate_hypercliques(h, t)? {
        let mut best = 0;
        for s in subsets_of_size(c, i) {
            let d = *degree_of.entry(s.bits()).or_insert_with(|| h.i_degree_unchecked(s));
            if d == 0 {
                return Err(Error::Hypergraph(format!("{i}-set {s} inside clique {c} has degree 0")));
            }
            best = best.max(d);
        }
        *groups.entry(best as u64).or_default() += 1;
    }
    Ok(groups)
}

/// `sum over T of 1 / C(x(T) - offset, t - offset)`, grouped by degree.
struct WeightSum {
    t: usize,
    i: usize,
    q: usize,
    offset: usize,
    groups: BTreeMap<u64, usize>,
}

impl WeightSum {
    fn float(&self) -> f64 {
        let k = (self.t - self.offset) as u64;
        self.groups
            .iter()
            .map(|(&d, &c)| c as f64 / gen_binom_f64(solve_x(d, self.i, self.q) - self.offset as f64, k))
            .sum()
    }

    fn exact(&self) -> Option<ExactRational> {
        let k = (self.t - self.offset) as u64;
        let mut acc = ExactRational::zero();
        for (&d, &c) in &self.groups {
            let b = bracket_x(d, self.i, self.q, 8);
            if !b.is_exact() {
                return None;
            }
            let y = &b.lo - &ExactRational::from(self.offset);
            acc += ExactRational::from(c) / gen_binom(&y, k);
        }
        Some(acc)
    }

    /// Rational enclosure of the sum with roots bracketed to `bits` places.
    fn enclosure(&self, bits: u32) -> (ExactRational, ExactRational) {
        let k = (self.t - self.offset) as u64;
        let floor = ExactRational::from(self.t);
        let mut lo = ExactRational::zero();
        let mut hi = ExactRational::zero();
        for (&d, &c) in &self.groups {
            let b = bracket_x(d, self.i, self.q, bits);
            let off = ExactRational::from(self.offset);
            let x_lo = if b.lo < floor { floor.clone() } else { b.lo.clone() };
            let c = ExactRational::from(c);
            lo += &c / &gen_binom(&(&b.hi - &off), k);
            hi += c / gen_binom(&(x_lo - off), k);
        }
        (lo, hi)
    }

    fn value(&self) -> Value {
        match self.exact() {
            Some(q) => Value::Exact(q),
            None => Value::Real(RealValue::new(self.float())),
        }
    }

    /// Compares the sum with a rational bound: exactly when all roots are
    /// integers, by floating point away from ties, and by root brackets near
    /// ties. A tie that survives 512-bit brackets is reported as equality.
    fn decide(&self, bound: &ExactRational) -> Ordering {
        if let Some(q) = self.exact() {
            return q.cmp(bound);
        }
        let diff = self.float() - bound.to_f64();
        if diff.abs() > NEAR_TIE {
            return if diff < 0.0 { Ordering::Less } else { Ordering::Greater };
        }
        for bits in [64, 128, 256, 512] {
            let (lo, hi) = self.enclosure(bits);
            if &lo > bound {
                return Ordering::Greater;
            }
            if &hi < bound {
                return Ordering::Less;
            }
        }
        Ordering::Equal
    }
}

fn check_order(t: usize, q: usize, i: usize) -> Result<()> {
    if !(t >= q && q > i && i >= 1) {
        return Err(invalid(format!("need t >= q > i >= 1 (t = {t}, q = {q}, i = {i})")));
    }
    Ok(())
}

fn hyper_params(h: &UniformHypergraph, t: usize, i: usize) -> Params {
    Params { t: Some(t), i: Some(i), q: Some(h.q), ..Params::default() }
}

/// The localized clique bound `sum s(T) <= C(n, i) / C(t, i)`.
pub fn verify_local_kr22(h: &UniformHypergraph, t: usize, i: usize) -> Result<VerificationReport> {
    check_order(t, h.q, i)?;
    let sum = WeightSum { t, i, q: h.q, offset: i, groups: cliques_by_degree(h, t, i)? };
    let bound = binom_q(h.n as u64, i as u64) / binom_q(t as u64, i as u64);
    let order = sum.decide(&bound);
    Ok(VerificationReport::decided(
        format!("{h}"),
        TheoremId::LocalHypergraph,
        hyper_params(h, t, i),
        sum.value(),
        Value::Exact(bound),
        order,
        None,
        None,
    ))
}

/// The bounded-degree clique bound `N(K_t) <= C(n, i) / C(x, i) * C(x, t)`,
/// applicable when `Delta_i <= C(x - i, q - i)` and `x >= q`.
pub fn verify_kr22(h: &UniformHypergraph, t: usize, i: usize, x_cap: &ExactRational) -> Result<VerificationReport> {
    check_order(t, h.q, i)?;
    if *x_cap < ExactRational::from(h.q) {
        return Err(invalid(format!("x must be at least q = {}", h.q)));
    }
    let count = ExactRational::from(enumerate_hypercliques(h, t)?.len());
    let bound = binom_q(h.n as u64, i as u64) / gen_binom(x_cap, i as u64) * gen_binom(x_cap, t as u64);
    let mut params = hyper_params(h, t, i);
    params.x_cap = Some(x_cap.clone());
    let cap = gen_binom(&(x_cap - &ExactRational::from(i)), (h.q - i) as u64);
    let applicable = ExactRational::from(h.max_i_degree(i)?) <= cap;
    let order = count.cmp(&bound);
    let mut report = VerificationReport::decided(
        format!("{h}"),
        TheoremId::Kr22,
        params,
        Value::Exact(count),
        Value::Exact(bound),
        order,
        None,
        None,
    );
    if !applicable {
        report.status = Status::NotApplicable;
        report.equality = false;
    }
    Ok(report)
}

/// For a graph viewed as a 2-uniform hypergraph with `i = 1` and `x` one more
/// than the maximum degree: both the bounded-degree bound and the edge-count
/// bound hold, and they count the same number of `t`-cliques.
pub fn kr22_matches_lovasz(g: &Graph, t: usize) -> Result<bool> {
    let h = UniformHypergraph::from_graph(g);
    let x = ExactRational::from(g.max_degree().max(1) + 1);
    let kr = verify_kr22(&h, t, 1, &x)?;
    let lov = crate::verify::verify_derived(g, TheoremId::LovaszKk, &Params::t(t))?;
    Ok(kr.status == Status::Ok
        && lov.status == Status::Ok
        && kr.sum == lov.sum
        && kr.sum == Value::Exact(ExactRational::from(count_cliques(g, t))))
}

/// Conjectured edge version: `sum 1 / C(x(T) - q, t - q) <= m / C(t, q)`.
pub fn hypergraph_m_sum(h: &UniformHypergraph, t: usize, i: usize) -> Result<(Value, ExactRational, Ordering)> {
    check_order(t, h.q, i)?;
    let sum = WeightSum { t, i, q: h.q, offset: h.q, groups: cliques_by_degree(h, t, i)? };
    let bound = ExactRational::from(h.m()) / binom_q(t as u64, h.q as u64);
    let order = sum.decide(&bound);
    Ok((sum.value(), bound, order))
}

/// Largest number of candidate edges for exhaustive generation.
pub const MAX_GENERATED_EDGE_SLOTS: usize = 20;

/// One representative per isomorphism class of `q`-uniform hypergraphs on
/// `n` vertices, grown one edge at a time.
pub fn enumerate_uniform_hypergraphs(n: usize, q: usize) -> Result<Vec<UniformHypergraph>> {
    if q == 0 || q > n.max(1) && n > 0 {
        return Err(invalid(format!("need 1 <= q <= n (n = {n}, q = {q})")));
    }
    let slots = subsets_of_size(VertexSet::range(n), q);
    if slots.len() > MAX_GENERATED_EDGE_SLOTS || n > 8 {
        return Err(Error::CapExceeded {
            what: "hypergraph edge slots",
            value: slots.len(),
            cap: MAX_GENERATED_EDGE_SLOTS,
        });
    }
    let index: BTreeMap<u64, usize> = slots.iter().enumerate().map(|(k, s)| (s.bits(), k)).collect();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            slots
                .iter()
                .map(|s| index[&s.iter().map(|v| p[v]).collect::<VertexSet>().bits()])
                .collect()
        })
        .collect();
    let canon = |mask: u64| -> u64 {
        images
            .iter()
            .map(|img| VertexSet::from_bits(mask).iter().fold(0u64, |acc, k| acc | 1 << img[k]))
            .min()
            .unwrap_or(mask)
    };
    let mut all: BTreeSet<u64> = BTreeSet::new();
    let mut level: BTreeSet<u64> = BTreeSet::from([0u64]);
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &mask in &level {
            for k in 0..slots.len() {
                if mask & (1 << k) == 0 {
                    next.insert(canon(mask | 1 << k));
                }
            }
        }
        all.extend(level);
        level = next;
    }
    let mut out: Vec<UniformHypergraph> = all
        .into_iter()
        .map(|mask| {
            let edges = VertexSet::from_bits(mask).iter().map(|k| slots[k]).collect();
            UniformHypergraph::from_sets(n, q, edges).expect("slots are q-sets")
        })
        .collect();
    out.sort_by(|a, b| (a.m(), &a.edges).cmp(&(b.m(), &b.edges)));
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for j in 0..k {
            heap(k - 1, p, out);
            let swap = if k % 2 == 0 { j } else { 0 };
            p.swap(swap, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    if out.is_empty() {
        out.push(vec![]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let fano = UniformHypergraph::fano();
        for pair in subsets_of_size(VertexSet::range(7), 2) {
            assert_eq!(fano.i_degree(pair).unwrap(), 1);
        }
        for v in 0..7 {
            assert_eq!(fano.i_degree(VertexSet::singleton(v)).unwrap(), 3);
        }
        let k5 = UniformHypergraph::complete(5, 3).unwrap();
        assert_eq!(k5.i_degree(VertexSet::from_slice(&[0, 4])).unwrap(), 3);
        assert!(k5.i_degree(VertexSet::from_slice(&[0, 1, 2])).is_err());
        assert_eq!(fano.max_i_degree(1).unwrap(), 3);
    }

    #[test]
    fn roots() {
        assert!((solve_x(1, 2, 3) - 3.0).abs() < 1e-12);
        assert!((solve_x(3, 1, 3) - 4.0).abs() < 1e-12);
        assert_eq!(solve_x(0, 1, 3), 2.0);
        assert!(bracket_x(3, 1, 3, 10).is_exact());
    }

    #[test]
    fn cliques() {
        let fano = UniformHypergraph::fano();
        let mut found = enumerate_hypercliques(&fano, 3).unwrap();
        found.sort_unstable();
        assert_eq!(found, fano.edges().to_vec());
        assert!(enumerate_hypercliques(&fano, 4).unwrap().is_empty());
        let k5 = UniformHypergraph::complete(5, 3).unwrap();
        assert_eq!(enumerate_hypercliques(&k5, 4).unwrap().len(), 5);
        assert!(enumerate_hypercliques(&k5, 2).is_err());
    }

    #[test]
    fn local_bound_examples() {
        let r = verify_local_kr22(&UniformHypergraph::fano(), 3, 2).unwrap();
        assert_eq!(r.sum, Value::Exact(ExactRational::from(7u64)));
        assert!(r.equality);
        let k5 = UniformHypergraph::complete(5, 3).unwrap();
        let r = verify_local_kr22(&k5, 3, 1).unwrap();
        assert_eq!(r.sum, Value::Exact(ExactRational::new(5, 3)));
        assert!(r.equality);
        let one = UniformHypergraph::complete(3, 3).unwrap();
        let r = verify_local_kr22(&one, 3, 1).unwrap();
        assert!(r.equality);
        assert!(verify_local_kr22(&one, 2, 1).is_err());
    }

    #[test]
    fn irrational_sizes_are_compared_safely() {
        // two triples sharing a vertex: that vertex has degree 2, x irrational
        let h = UniformHypergraph::new(5, 3, &[vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        let r = verify_local_kr22(&h, 3, 1).unwrap();
        assert!(matches!(r.sum, Value::Real(_)));
        assert_eq!(r.status, Status::Ok);
        assert!(!r.equality);
    }

    #[test]
    fn global_bound_examples() {
        let fano = UniformHypergraph::fano();
        let r = verify_kr22(&fano, 3, 2, &ExactRational::from(3u64)).unwrap();
        assert!(r.equality && r.status == Status::Ok);
        let k5 = UniformHypergraph::complete(5, 3).unwrap();
        let r = verify_kr22(&k5, 4, 1, &ExactRational::from(5u64)).unwrap();
        assert!(r.equality);
        let r = verify_kr22(&fano, 3, 1, &ExactRational::from(4u64)).unwrap();
        assert!(r.equality);
        let r = verify_kr22(&k5, 3, 2, &ExactRational::from(3u64)).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
    }

    #[test]
    fn generation_counts() {
        let counts: Vec<usize> =
            (3..=5).map(|n| enumerate_uniform_hypergraphs(n, 3).unwrap().len()).collect();
        assert_eq!(counts, [2, 5, 34]);
        assert_eq!(enumerate_uniform_hypergraphs(4, 2).unwrap().len(), 11);
    }

    #[test]
    fn graph_consistency() {
        for g in [Graph::cycle(5).unwrap(), Graph::complete(4).unwrap(), Graph::petersen()] {
            for t in 2..=4 {
                assert!(kr22_matches_lovasz(&g, t).unwrap());
            }
        }
    }
}
