//! Brute-force reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use locweight_core::{Graph, VertexSet};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest adjacency bit string over all relabelings.
pub fn brute_canonical_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let ps = pairs(n);
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (v, &img) in p.iter().enumerate() {
                inv[img] = v;
            }
            ps.iter()
                .enumerate()
                .filter(|(_, &(a, b))| g.has_edge(inv[a], inv[b]))
                .fold(0u64, |acc, (k, _)| acc | 1 << k)
        })
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes on `n` vertices by deduplicating every labeled graph.
pub fn labeled_dedup_count(n: usize) -> usize {
    let perms = permutations(n);
    let slots = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    for mask in 0..(1u64 << slots) {
        seen.insert(brute_canonical_key(&labeled_graph(n, mask), &perms));
    }
    seen.len()
}

/// Number of isomorphism classes on `n` vertices by Burnside's lemma.
pub fn burnside_count(n: usize) -> u128 {
    let ps = pairs(n);
    let mut index = vec![vec![0; n]; n];
    for (k, &(a, b)) in ps.iter().enumerate() {
        index[a][b] = k;
        index[b][a] = k;
    }
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![false; ps.len()];
        let mut orbits = 0;
        for start in 0..ps.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                let (a, b) = ps[k];
                k = index[p[a]][p[b]];
            }
        }
        total += 1u128 << orbits;
    }
    total / perms.len() as u128
}

/// Edge-preserving injective maps from `h` into `g`.
pub fn injective_homomorphisms(g: &Graph, h: &Graph) -> usize {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> usize {
        let p = map.len();
        if p == h.n() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used.contains(v) {
                continue;
            }
            if (0..p).all(|q| !h.has_edge(p, q) || g.has_edge(v, map[q])) {
                map.push(v);
                total += rec(g, h, map, used.with(v));
                map.pop();
            }
        }
        total
    }
    rec(g, h, &mut Vec::new(), VertexSet::EMPTY)
}

/// Copies of `h` in `g`: injective homomorphisms over automorphisms.
pub fn naive_copy_count(g: &Graph, h: &Graph) -> usize {
    injective_homomorphisms(g, h) / injective_homomorphisms(h, h)
}

/// For every vertex set, the longest path (in edges) spanning exactly it, or `None`.
pub fn path_table(g: &Graph) -> Vec<Option<usize>> {
    let mut best = vec![None; 1 << g.n()];
    fn rec(g: &Graph, end: usize, used: VertexSet, len: usize, best: &mut [Option<usize>]) {
        let slot = &mut best[used.bits() as usize];
        *slot = Some(slot.map_or(len, |b: usize| b.max(len)));
        for w in g.neighbors(end).iter() {
            if !used.contains(w) {
                rec(g, w, used.with(w), len + 1, best);
            }
        }
    }
    for s in 0..g.n() {
        rec(g, s, VertexSet::singleton(s), 0, &mut best);
    }
    best
}

/// For every vertex set, whether some cycle has exactly that vertex set.
pub fn cycle_table(g: &Graph) -> Vec<bool> {
    let mut found = vec![false; 1 << g.n()];
    fn rec(g: &Graph, start: usize, end: usize, used: VertexSet, found: &mut [bool]) {
        if used.len() >= 3 && g.has_edge(end, start) {
            found[used.bits() as usize] = true;
        }
        for w in g.neighbors(end).iter() {
            if w > start && !used.contains(w) {
                rec(g, start, w, used.with(w), found);
            }
        }
    }
    for s in 0..g.n() {
        rec(g, s, s, VertexSet::singleton(s), &mut found);
    }
    found
}

/// Longest path through `required` read off a path table.
pub fn oracle_beta(table: &[Option<usize>], required: VertexSet) -> Option<usize> {
    table
        .iter()
        .enumerate()
        .filter(|&(mask, _)| required.is_subset(VertexSet::from_bits(mask as u64)))
        .filter_map(|(_, b)| *b)
        .max()
}

/// Longest cycle through `required` read off a cycle table, 0 if none.
pub fn oracle_gamma(table: &[bool], required: VertexSet) -> usize {
    table
        .iter()
        .enumerate()
        .filter(|&(mask, &ok)| ok && required.is_subset(VertexSet::from_bits(mask as u64)))
        .map(|(mask, _)| (mask as u64).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Order of the largest clique containing `t`, by trying every superset.
pub fn oracle_alpha(g: &Graph, t: VertexSet) -> usize {
    (0..1u64 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| t.is_subset(s) && g.is_clique(s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

/// Every clique of order `t` by subset filtering.
pub fn oracle_cliques(g: &Graph, t: usize) -> Vec<VertexSet> {
    (0..1u64 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| s.len() == t && g.is_clique(s))
        .collect()
}

/// All non-isomorphic graphs on `1..=n_max` vertices.
pub fn graphs_up_to(n_max: usize) -> Vec<Graph> {
    locweight_core::generate::enumerate_graphs_up_to(n_max).unwrap().into_iter().flatten().collect()
}
