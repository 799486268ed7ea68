//! Isomorph-free generation of small graphs.
//!
//! Graphs on `n` vertices are grown one vertex at a time from the classes on
//! `n - 1` vertices, joining the new vertex to every subset of the old ones and
//! keeping one representative per canonical form. Graphs with a fixed number
//! of edges and no isolated vertices are assembled from multisets of connected
//! graphs, which are themselves grown one edge at a time.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order for vertex-indexed enumeration.
pub const MAX_GENERATED_ORDER: usize = 8;
/// Default largest edge count for edge-indexed enumeration.
pub const MAX_GENERATED_SIZE: usize = 13;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::CapExceeded { what: "graph order", value: n, cap: MAX_GENERATED_ORDER });
    }
    Ok(())
}

fn grow_by_vertex(level: &[Graph], keep: &mut impl FnMut(&Graph) -> bool) -> Vec<Graph> {
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    for g in level {
        let k = g.n();
        let base = g.with_isolated(1).expect("order stays within the cap");
        for mask in 0..(1u64 << k) {
            let mut h = base.clone();
            for v in VertexSet::from_bits(mask) {
                h = h.with_edge(v, k).expect("new vertex is not yet adjacent");
            }
            if !keep(&h) {
                continue;
            }
            seen.insert(canonical_form(&h));
        }
    }
    seen.into_iter().map(|f| f.to_graph()).collect()
}

/// One representative per isomorphism class on `n` vertices, in canonical order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_where(n, |_| true)
}

/// Like [`enumerate_graphs`], restricted to graphs satisfying `keep`.
///
/// `keep` must be closed under taking induced subgraphs (for example
/// `F`-freeness), since rejected graphs are not grown further.
pub fn enumerate_graphs_where(n: usize, mut keep: impl FnMut(&Graph) -> bool) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..n {
        level = grow_by_vertex(&level, &mut keep);
    }
    Ok(level)
}

/// Classes on `1..=n_max` vertices, grouped by order (index `k` holds order `k + 1`).
pub fn enumerate_graphs_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(n_max)?;
    let mut out = Vec::with_capacity(n_max);
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..n_max {
        level = grow_by_vertex(&level, &mut |_| true);
        out.push(level.clone());
    }
    Ok(out)
}

/// Connected graphs grouped by edge count `0..=m` (edge count 0 holds `K_1`).
pub fn connected_graphs_by_edges(m: usize) -> Result<Vec<Vec<Graph>>> {
    if m > MAX_GENERATED_SIZE {
        return Err(Error::CapExceeded { what: "edge count", value: m, cap: MAX_GENERATED_SIZE });
    }
    let mut levels = vec![vec![Graph::empty(1)?]];
    for _ in 0..m {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        for g in levels.last().unwrap() {
            let n = g.n();
            for (a, b) in non_edges(g) {
                seen.insert(canonical_form(&g.with_edge(a, b)?));
            }
            let grown = g.with_isolated(1)?;
            for v in 0..n {
                seen.insert(canonical_form(&grown.with_edge(v, n)?));
            }
        }
        levels.push(seen.into_iter().map(|f| f.to_graph()).collect());
    }
    Ok(levels)
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// One representative per isomorphism class with exactly `m` edges, no
/// isolated vertices and at most `n_max` vertices.
pub fn enumerate_graphs_by_edges(m: usize, n_max: usize) -> Result<Vec<Graph>> {
    let connected = connected_graphs_by_edges(m)?;
    let mut out = Vec::new();
    if m == 0 {
        out.push(Graph::empty(0)?);
        return Ok(out);
    }
    // components are chosen in non-increasing (edge count, index) order
    let mut chosen: Vec<&Graph> = Vec::new();
    compose(&connected, m, (m, usize::MAX), 0, n_max, &mut chosen, &mut out)?;
    Ok(out)
}

fn compose<'a>(
    connected: &'a [Vec<Graph>],
    remaining: usize,
    max_key: (usize, usize),
    order: usize,
    n_max: usize,
    chosen: &mut Vec<&'a Graph>,
    out: &mut Vec<Graph>,
) -> Result<()> {
    if remaining == 0 {
        let mut g = Graph::empty(0)?;
        for c in chosen.iter() {
            g = g.disjoint_union(c)?;
        }
        out.push(g);
        return Ok(());
    }
    for size in (1..=remaining.min(max_key.0)).rev() {
        let top = if size == max_key.0 { max_key.1.saturating_add(1) } else { connected[size].len() };
        for idx in (0..top.min(connected[size].len())).rev() {
            let c = &connected[size][idx];
            if order + c.n() > n_max {
                continue;
            }
            chosen.push(c);
            compose(connected, remaining - size, (size, idx), order + c.n(), n_max, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_by_order() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn filtered_generation() {
        // triangle-free graphs on 5 vertices: 14 classes
        let tf = enumerate_graphs_where(5, |g| crate::cliques::count_cliques(g, 3) == 0).unwrap();
        assert_eq!(tf.len(), 14);
    }

    #[test]
    fn connected_counts_by_size() {
        let levels = connected_graphs_by_edges(7).unwrap();
        let counts: Vec<usize> = levels.iter().map(|l| l.len()).collect();
        assert_eq!(counts, [1, 1, 1, 3, 5, 12, 30, 79]);
        assert!(levels.iter().flatten().all(|g| g.is_connected()));
    }

    #[test]
    fn classes_by_size() {
        let counts: Vec<usize> =
            (0..=6).map(|m| enumerate_graphs_by_edges(m, 64).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 11, 26, 68]);
        let three = enumerate_graphs_by_edges(3, 64).unwrap();
        assert!(three.iter().all(|g| g.m() == 3 && g.min_degree() >= 1));
        // order cap drops 3K_2 and K_2 u P_3
        assert_eq!(enumerate_graphs_by_edges(3, 4).unwrap().len(), 3);
        assert_eq!(enumerate_graphs_by_edges(1, 64).unwrap(), [Graph::complete(2).unwrap()]);
    }
}
