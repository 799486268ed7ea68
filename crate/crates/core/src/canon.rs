//! Canonical labelling by individualization and refinement.
//!
//! The canonical form of a graph is the lexicographically smallest adjacency
//! code over all labellings reachable in the search tree of equitable ordered
//! partitions. Branches that individualize a twin of an already explored
//! vertex are skipped: swapping two twins is an automorphism fixing the
//! current partition, so both branches yield the same set of leaf codes.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Adjacency rows of a graph under its canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
    }
}

type Cells = Vec<Vec<usize>>;

fn cell_masks(cells: &Cells) -> Vec<u64> {
    cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks = cell_masks(&cells);
        let mut changed = false;
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v).bits();
                    let sig = masks.iter().map(|&m| (nb & m).count_ones() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let before = next.len();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
            changed |= next.len() - before > 1;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn leaf_code(g: &Graph, cells: &Cells) -> (Vec<u64>, Vec<usize>) {
    let n = g.n();
    let mut label = vec![0usize; n];
    for (pos, cell) in cells.iter().enumerate() {
        label[cell[0]] = pos;
    }
    let mut rows = vec![0u64; n];
    for v in 0..n {
        rows[label[v]] = g.neighbors(v).iter().fold(0u64, |r, w| r | (1 << label[w]));
    }
    (rows, label)
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let leaf = leaf_code(g, &cells);
        if best.as_ref().map_or(true, |b| leaf.0 < b.0) {
            *best = Some(leaf);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        let twin_of_tried = tried.iter().any(|&u| {
            g.neighbors(u).without(v) == g.neighbors(v).without(u)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
    }
}

/// Returns `perm` with `perm[v]` the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical(g).1
}

/// Canonical form together with the labelling that produces it.
pub fn canonical(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm { n: 0, rows: Vec::new() }, Vec::new());
    }
    // start from degree classes in increasing degree order
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.neighbors(v).len(), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (k, &(d, v)) in by_degree.iter().enumerate() {
        if k == 0 || by_degree[k - 1].0 != d {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(v);
    }
    let mut best = None;
    search(g, cells, &mut best);
    let (rows, label) = best.expect("search reaches at least one leaf");
    (CanonicalForm { n, rows }, label)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical(g).0
}

/// The graph relabelled canonically; isomorphic inputs give equal outputs.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}
