//! Clique listing by recursive neighbor-set intersection.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Streams the `t`-cliques of a graph in lexicographic order of their sorted
/// vertex lists. Each clique is extended only by candidates above its largest
/// member, so every clique is produced once.
pub struct Cliques<'g> {
    g: &'g Graph,
    t: usize,
    stack: Vec<(VertexSet, VertexSet)>,
}

impl<'g> Iterator for Cliques<'g> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((clique, cand)) = self.stack.pop() {
            let size = clique.len();
            if size == self.t {
                return Some(clique);
            }
            if size + cand.len() < self.t {
                continue;
            }
            // push children in decreasing order so the smallest is popped first
            let members = cand.to_vec();
            for &v in members.iter().rev() {
                let next_cand = cand.above(v).intersection(self.g.neighbors(v));
                if size + 1 + next_cand.len() >= self.t {
                    self.stack.push((clique.with(v), next_cand));
                }
            }
        }
        None
    }
}

/// All `t`-cliques of `g` as a stream; empty when `t == 0` or `t > n`.
pub fn enumerate_cliques(g: &Graph, t: usize) -> Cliques<'_> {
    let stack = if t == 0 || t > g.n() {
        Vec::new()
    } else {
        vec![(VertexSet::EMPTY, g.vertices())]
    };
    Cliques { g, t, stack }
}

pub fn count_cliques(g: &Graph, t: usize) -> usize {
    enumerate_cliques(g, t).count()
}

/// Size of a maximum clique inside `within`.
pub fn max_clique_within(g: &Graph, within: VertexSet) -> usize {
    fn rec(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + cand.len() <= *best {
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            rec(g, rest.intersection(g.neighbors(v)), size + 1, best);
            rest = rest.without(v);
        }
    }
    let mut best = 0;
    rec(g, within, 0, &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique_within(g, g.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binom;
    use num_bigint::BigInt;

    #[test]
    fn counts_on_small_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_cliques(&k4, 3), 4);
        assert_eq!(count_cliques(&Graph::cycle(5).unwrap(), 3), 0);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let tri: Vec<_> = enumerate_cliques(&diamond, 3).map(|c| c.to_vec()).collect();
        assert_eq!(tri, [[0, 1, 2], [0, 1, 3]]);
        assert_eq!(count_cliques(&k4, 0), 0);
        assert_eq!(count_cliques(&k4, 5), 0);
        assert_eq!(count_cliques(&k4, 1), 4);
    }

    #[test]
    fn complete_graphs_have_binomially_many() {
        for n in 0..=8usize {
            let kn = Graph::complete(n).unwrap();
            for t in 1..=n {
                assert_eq!(BigInt::from(count_cliques(&kn, t)), binom(n as u64, t as u64));
            }
        }
    }

    #[test]
    fn lexicographic_order() {
        let k5 = Graph::complete(5).unwrap();
        let got: Vec<Vec<usize>> = enumerate_cliques(&k5, 2).map(|c| c.to_vec()).collect();
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::petersen()), 2);
        assert_eq!(clique_number(&Graph::complete(6).unwrap()), 6);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
    }
}
