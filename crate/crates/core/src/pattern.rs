//! Pattern graphs and enumeration of their (not necessarily induced) copies.
//!
//! A copy of `H` in `G` is the image of an injective homomorphism, i.e. a
//! vertex set together with the embedded edge set. Two homomorphisms give the
//! same copy exactly when they differ by an automorphism of `H`, so the search
//! emits a homomorphism only when it is the lexicographic minimum of its orbit
//! under `Aut(H)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::rational::factorial;

/// Largest pattern order accepted (automorphisms are found by exhaustive search).
pub const MAX_PATTERN_ORDER: usize = 10;

/// A small graph `H` with its automorphism group and dominating vertices.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    name: String,
    graph: Graph,
    automorphisms: Vec<Vec<usize>>,
    dom: VertexSet,
    order: Vec<usize>,
}

impl PartialEq for PatternGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self> {
        let t = graph.n();
        if t > MAX_PATTERN_ORDER {
            return Err(Error::CapExceeded { what: "pattern order", value: t, cap: MAX_PATTERN_ORDER });
        }
        let automorphisms = automorphisms(&graph);
        let dom = (0..t)
            .filter(|&v| graph.neighbors(v).len() + 1 == t)
            .collect();
        let order = search_order(&graph);
        Ok(PatternGraph { name: name.into(), graph, automorphisms, dom, order })
    }

    /// Looks up a catalog name: `K<t>`, `P<n>` (n vertices), `S<r>` (r leaves),
    /// `C<k>`, `E<k>` (edgeless), `paw`, `diamond`; an optional `_` after the
    /// letter is accepted.
    pub fn from_name(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownPattern(name.to_string());
        let lower = name.to_ascii_lowercase();
        let graph = match lower.as_str() {
            "paw" => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])?,
            "diamond" => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?,
            _ => {
                let mut chars = lower.chars();
                let kind = chars.next().ok_or_else(unknown)?;
                let rest = chars.as_str();
                let rest = rest.strip_prefix('_').unwrap_or(rest);
                let k: usize = rest.parse().map_err(|_| unknown())?;
                match kind {
                    'k' => Graph::complete(k)?,
                    'p' if k >= 1 => Graph::path(k)?,
                    's' => Graph::star(k)?,
                    'c' => Graph::cycle(k)?,
                    'e' => Graph::empty(k)?,
                    _ => return Err(unknown()),
                }
            }
        };
        PatternGraph::new(name, graph)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices `t`.
    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn automorphism_count(&self) -> u64 {
        self.automorphisms.len() as u64
    }

    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    /// `Dom(H)`: vertices adjacent to all others.
    pub fn dominating(&self) -> VertexSet {
        self.dom
    }

    /// `dom(H)`.
    pub fn dom_count(&self) -> usize {
        self.dom.len()
    }

    pub fn is_complete(&self) -> bool {
        let t = self.order();
        self.graph.m() == t * t.saturating_sub(1) / 2
    }

    /// `Some(r)` when `H` is the star `S_r` (`r >= 1`).
    pub fn star_leaves(&self) -> Option<usize> {
        let t = self.order();
        if t < 2 || self.graph.m() != t - 1 {
            return None;
        }
        (self.dom_count() >= 1 && self.graph.edges().len() == t - 1).then_some(t - 1)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.order()).any(|v| self.graph.neighbors(v).is_empty())
    }

    /// `H` with `u` of its dominating vertices removed.
    pub fn remove_dominating(&self, u: usize) -> Result<PatternGraph> {
        if u > self.dom_count() {
            return Err(invalid(format!(
                "cannot remove {u} dominating vertices from {} (dom = {})",
                self.name,
                self.dom_count()
            )));
        }
        let removed: VertexSet = self.dom.iter().take(u).collect();
        let rest = self.graph.vertices().difference(removed);
        PatternGraph::new(format!("{}-{}dom", self.name, u), self.graph.induced(rest))
    }
}

fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    fn rec(h: &Graph, k: usize, map: &mut Vec<usize>, used: VertexSet, out: &mut Vec<Vec<usize>>) {
        let t = h.n();
        if k == t {
            out.push(map.clone());
            return;
        }
        for img in h.vertices().difference(used) {
            if h.neighbors(img).len() != h.neighbors(k).len() {
                continue;
            }
            let ok = (0..k).all(|p| h.has_edge(p, k) == h.has_edge(map[p], img));
            if ok {
                map.push(img);
                rec(h, k + 1, map, used.with(img), out);
                map.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(h, 0, &mut Vec::with_capacity(h.n()), VertexSet::EMPTY, &mut out);
    out
}

/// Order pattern vertices so each one has as many earlier neighbors as
/// possible, breaking ties by degree.
fn search_order(h: &Graph) -> Vec<usize> {
    let t = h.n();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(t);
    while order.len() < t {
        let next = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| (h.neighbors(v).intersection(placed).len(), h.neighbors(v).len(), usize::MAX - v))
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    order
}

/// One copy of a pattern inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCopy {
    pub vertices: VertexSet,
    /// Embedded edges `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Copy vertices incident, within `edges`, to every other copy vertex.
    pub dom_vertices: VertexSet,
    /// `embedding[p]` is the image of pattern vertex `p`.
    pub embedding: Vec<usize>,
}

impl SubgraphCopy {
    fn from_embedding(h: &Graph, embedding: Vec<usize>) -> Self {
        let vertices: VertexSet = embedding.iter().copied().collect();
        let mut edges: Vec<(usize, usize)> = h
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (embedding[a], embedding[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        let t = embedding.len();
        let mut deg = [0usize; 64];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let dom_vertices = vertices.iter().filter(|&v| deg[v] + 1 == t).collect();
        SubgraphCopy { vertices, edges, dom_vertices, embedding }
    }
}

/// Visits every copy of `h` in `g` once; the visitor may stop early.
pub fn for_each_copy<B>(
    g: &Graph,
    h: &PatternGraph,
    mut visit: impl FnMut(SubgraphCopy) -> ControlFlow<B>,
) -> Option<B> {
    let t = h.order();
    if t > g.n() {
        return None;
    }
    if t == 0 {
        return match visit(SubgraphCopy::from_embedding(h.graph(), Vec::new())) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        };
    }
    let mut map = vec![usize::MAX; t];
    let mut result = None;
    let _ = search(g, h, 0, VertexSet::EMPTY, &mut map, &mut |emb: &[usize]| {
        if !is_orbit_minimum(emb, h.automorphisms()) {
            return ControlFlow::Continue(());
        }
        match visit(SubgraphCopy::from_embedding(h.graph(), emb.to_vec())) {
            ControlFlow::Break(b) => {
                result = Some(b);
                ControlFlow::Break(())
            }
            ControlFlow::Continue(()) => ControlFlow::Continue(()),
        }
    });
    result
}

fn is_orbit_minimum(emb: &[usize], auts: &[Vec<usize>]) -> bool {
    auts.iter().all(|sigma| {
        for (p, &s) in sigma.iter().enumerate() {
            let (a, b) = (emb[p], emb[s]);
            if a != b {
                return a < b;
            }
        }
        true
    })
}

fn search(
    g: &Graph,
    h: &PatternGraph,
    k: usize,
    used: VertexSet,
    map: &mut [usize],
    emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let hg = h.graph();
    if k == h.order() {
        return emit(map);
    }
    let p = h.order[k];
    let mut cand = g.vertices().difference(used);
    for q in hg.neighbors(p) {
        if map[q] != usize::MAX {
            cand = cand.intersection(g.neighbors(map[q]));
        }
    }
    let need = hg.neighbors(p).len();
    for x in cand {
        if g.neighbors(x).len() < need {
            continue;
        }
        map[p] = x;
        search(g, h, k + 1, used.with(x), map, emit)?;
    }
    map[p] = usize::MAX;
    ControlFlow::Continue(())
}

/// All copies of `h` in `g`.
pub fn enumerate_copies(g: &Graph, h: &PatternGraph) -> Vec<SubgraphCopy> {
    let mut out = Vec::new();
    for_each_copy::<()>(g, h, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out
}

/// `N(H; G)`.
pub fn count_copies(g: &Graph, h: &PatternGraph) -> usize {
    let mut count = 0;
    for_each_copy::<()>(g, h, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// True iff `g` contains a copy of `h`.
pub fn contains_copy(g: &Graph, h: &PatternGraph) -> bool {
    for_each_copy(g, h, |_| ControlFlow::Break(())).is_some()
}

/// `N(H; K_k) = k! / ((k - t)! |Aut(H)|)`, zero when `k < t`.
pub fn count_copies_in_clique(h: &PatternGraph, k: usize) -> BigInt {
    let t = h.order();
    if k < t {
        return BigInt::zero();
    }
    factorial(k as u64) / factorial((k - t) as u64) / BigInt::from(h.automorphism_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(name: &str) -> PatternGraph {
        PatternGraph::from_name(name).unwrap()
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(pat("K3").automorphism_count(), 6);
        assert_eq!(pat("P4").automorphism_count(), 2);
        assert_eq!(pat("S3").automorphism_count(), 6);
        assert_eq!(pat("C5").automorphism_count(), 10);
        assert_eq!(pat("paw").automorphism_count(), 2);
        assert_eq!(pat("diamond").automorphism_count(), 4);
        assert_eq!(pat("K_4").dom_count(), 4);
        assert_eq!(pat("paw").dom_count(), 1);
        assert_eq!(pat("diamond").dom_count(), 2);
        assert_eq!(pat("S3").star_leaves(), Some(3));
        assert_eq!(pat("K2").star_leaves(), Some(1));
        assert_eq!(pat("P3").star_leaves(), Some(2));
        assert_eq!(pat("K3").star_leaves(), None);
        assert_eq!(pat("P4").star_leaves(), None);
        assert!(PatternGraph::from_name("Q3").is_err());
        assert!(PatternGraph::from_name("K").is_err());
    }

    #[test]
    fn copy_counts() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(count_copies(&k3, &pat("P3")), 3);
        assert_eq!(count_copies(&Graph::complete(5).unwrap(), &pat("paw")), 60);
        assert_eq!(count_copies(&Graph::complete(4).unwrap(), &pat("K2")), 6);
        assert_eq!(count_copies(&Graph::cycle(5).unwrap(), &pat("K3")), 0);
        assert_eq!(count_copies(&Graph::complete(4).unwrap(), &pat("C4")), 3);
        assert!(contains_copy(&Graph::cycle(5).unwrap(), &pat("P4")));
        assert!(!contains_copy(&Graph::star(4).unwrap(), &pat("P4")));
    }

    #[test]
    fn copies_on_one_vertex_set_are_distinct() {
        // K4 contains three 4-cycles on the same vertex set
        let copies = enumerate_copies(&Graph::complete(4).unwrap(), &pat("C4"));
        assert_eq!(copies.len(), 3);
        assert!(copies.iter().all(|c| c.vertices == VertexSet::range(4)));
        assert_ne!(copies[0].edges, copies[1].edges);
    }

    #[test]
    fn dominating_vertices_of_copies() {
        let g = Graph::complete(5).unwrap();
        for c in enumerate_copies(&g, &pat("paw")) {
            assert_eq!(c.dom_vertices.len(), 1);
            assert_eq!(c.edges.len(), 4);
        }
        for c in enumerate_copies(&g, &pat("diamond")) {
            assert_eq!(c.dom_vertices.len(), 2);
        }
    }

    #[test]
    fn copies_in_cliques() {
        let paw_minus = pat("paw").remove_dominating(1).unwrap();
        assert_eq!(paw_minus.graph().m(), 1);
        assert_eq!(count_copies_in_clique(&paw_minus, 3), BigInt::from(3));
        let star_minus = pat("S4").remove_dominating(1).unwrap();
        assert_eq!(count_copies_in_clique(&star_minus, 4), BigInt::from(1));
        assert_eq!(count_copies_in_clique(&pat("K3"), 2), BigInt::zero());
        let empty = pat("K2").remove_dominating(2).unwrap();
        assert_eq!(empty.order(), 0);
        assert_eq!(count_copies_in_clique(&empty, 0), BigInt::from(1));
        assert_eq!(count_copies(&Graph::complete(3).unwrap(), &empty), 1);
        assert!(pat("paw").remove_dominating(2).is_err());
    }
}
