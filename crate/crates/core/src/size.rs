//! Size functions: the largest clique, path, star or cycle containing a copy.
//!
//! Paths and cycles are searched exactly by depth-first extension of simple
//! paths. A branch is cut when the vertices still reachable from its end
//! cannot beat the best length found, or when some required vertex is no
//! longer reachable.

use crate::bitset::VertexSet;
use crate::cliques::max_clique_within;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::SubgraphCopy;

/// Which size function a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SizeKind {
    Alpha,
    Beta,
    Theta,
    Gamma,
}

/// A size function evaluated on one copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeProfile {
    pub vertices: VertexSet,
    pub kind: SizeKind,
    pub value: usize,
}

fn check_clique(g: &Graph, t_clique: VertexSet) -> Result<()> {
    g.check_set(t_clique)?;
    if t_clique.is_empty() {
        return Err(Error::EmptySet);
    }
    if !g.is_clique(t_clique) {
        return Err(Error::NotAClique);
    }
    Ok(())
}

/// Order of the largest clique of `g` containing `t_clique`.
pub fn alpha(g: &Graph, t_clique: VertexSet) -> Result<usize> {
    check_clique(g, t_clique)?;
    let common = g.common_neighborhood_unchecked(t_clique);
    Ok(t_clique.len() + max_clique_within(g, common))
}

/// Length in edges of the longest path of `g` whose vertex set contains `t_clique`.
pub fn beta(g: &Graph, t_clique: VertexSet) -> Result<usize> {
    check_clique(g, t_clique)?;
    Ok(longest_path_through(g, t_clique).expect("a clique lies on a path"))
}

/// Largest `G`-degree among the dominating vertices of a copy.
pub fn theta(g: &Graph, copy: &SubgraphCopy) -> Result<usize> {
    g.check_set(copy.vertices)?;
    copy.dom_vertices
        .iter()
        .map(|v| g.neighbors(v).len())
        .max()
        .ok_or(Error::NoDominatingVertex)
}

/// Length of the longest cycle of `g` whose vertex set contains `t_clique`, or 0.
pub fn gamma(g: &Graph, t_clique: VertexSet) -> Result<usize> {
    check_clique(g, t_clique)?;
    Ok(longest_cycle_through(g, t_clique))
}

pub fn profile(g: &Graph, kind: SizeKind, copy: &SubgraphCopy) -> Result<SizeProfile> {
    let value = match kind {
        SizeKind::Alpha => alpha(g, copy.vertices)?,
        SizeKind::Beta => beta(g, copy.vertices)?,
        SizeKind::Theta => theta(g, copy)?,
        SizeKind::Gamma => gamma(g, copy.vertices)?,
    };
    Ok(SizeProfile { vertices: copy.vertices, kind, value })
}

struct PathSearch<'g> {
    g: &'g Graph,
    required: VertexSet,
    best: Option<usize>,
    ceiling: usize,
}

impl PathSearch<'_> {
    fn extend(&mut self, end: usize, used: VertexSet, len: usize) {
        if self.required.is_subset(used) && self.best.map_or(true, |b| len > b) {
            self.best = Some(len);
        }
        if self.best == Some(self.ceiling) {
            return;
        }
        let free = self.g.vertices().difference(used);
        let reach = self.g.reachable_within(end, free.with(end)).without(end);
        if !self.required.difference(used).is_subset(reach) {
            return;
        }
        if let Some(b) = self.best {
            if len + reach.len() <= b {
                return;
            }
        }
        for w in self.g.neighbors(end).intersection(free) {
            self.extend(w, used.with(w), len + 1);
            if self.best == Some(self.ceiling) {
                return;
            }
        }
    }
}

/// Longest simple path (in edges) containing every vertex of `required`;
/// `None` when no path contains them all.
pub fn longest_path_through(g: &Graph, required: VertexSet) -> Option<usize> {
    let scope = match required.first() {
        Some(v) => g.reachable_within(v, g.vertices()),
        None => g.vertices(),
    };
    if !required.is_subset(scope) {
        return None;
    }
    let ceiling = if required.is_empty() {
        g.components().iter().map(|c| c.len()).max().unwrap_or(1).saturating_sub(1)
    } else {
        scope.len() - 1
    };
    let mut search = PathSearch { g, required, best: None, ceiling };
    for s in scope {
        search.extend(s, VertexSet::singleton(s), 0);
        if search.best == Some(ceiling) {
            break;
        }
    }
    search.best
}

/// Number of edges of a longest path in `g` (0 for graphs without edges).
pub fn longest_path(g: &Graph) -> usize {
    longest_path_through(g, VertexSet::EMPTY).unwrap_or(0)
}

struct CycleSearch<'g> {
    g: &'g Graph,
    start: usize,
    required: VertexSet,
    best: usize,
    ceiling: usize,
}

impl CycleSearch<'_> {
    fn extend(&mut self, end: usize, used: VertexSet, order: usize) {
        if order >= 3 && self.g.has_edge(end, self.start) && self.required.is_subset(used) {
            self.best = self.best.max(order);
        }
        if self.best == self.ceiling {
            return;
        }
        let free = self.g.vertices().difference(used);
        let reach = self.g.reachable_within(end, free.with(end)).without(end);
        if !self.required.difference(used).is_subset(reach) {
            return;
        }
        if order + reach.len() <= self.best {
            return;
        }
        // the cycle must be able to close back at the start
        if order >= 2 && self.g.neighbors(self.start).intersection(reach.with(end)).is_empty() {
            return;
        }
        for w in self.g.neighbors(end).intersection(free) {
            self.extend(w, used.with(w), order + 1);
            if self.best == self.ceiling {
                return;
            }
        }
    }
}

/// Longest cycle (in vertices) containing every vertex of the non-empty set `required`; 0 if none.
pub fn longest_cycle_through(g: &Graph, required: VertexSet) -> usize {
    let Some(start) = required.first() else {
        return 0;
    };
    let scope = g.reachable_within(start, g.vertices());
    if !required.is_subset(scope) {
        return 0;
    }
    let mut search = CycleSearch { g, start, required, best: 0, ceiling: scope.len() };
    search.extend(start, VertexSet::singleton(start), 1);
    search.best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{enumerate_copies, PatternGraph};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn alpha_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(alpha(&k4, set(&[0, 1])).unwrap(), 4);
        assert_eq!(alpha(&Graph::cycle(5).unwrap(), set(&[0, 1])).unwrap(), 2);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(alpha(&diamond, set(&[0, 1])).unwrap(), 3);
        assert!(matches!(alpha(&diamond, set(&[2, 3])), Err(Error::NotAClique)));
        assert!(matches!(alpha(&diamond, VertexSet::EMPTY), Err(Error::EmptySet)));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&Graph::cycle(5).unwrap(), set(&[0, 1])).unwrap(), 4);
        assert_eq!(beta(&Graph::path(5).unwrap(), set(&[1, 2])).unwrap(), 4);
        assert_eq!(beta(&Graph::complete(4).unwrap(), set(&[0, 1, 2])).unwrap(), 3);
        // vertices need only lie on the path: the star's leaf edge
        assert_eq!(beta(&Graph::star(3).unwrap(), set(&[0, 1])).unwrap(), 2);
        assert_eq!(beta(&Graph::empty(3).unwrap(), set(&[1])).unwrap(), 0);
        assert_eq!(longest_path(&Graph::petersen()), 9);
        assert_eq!(longest_path(&Graph::empty(2).unwrap()), 0);
    }

    #[test]
    fn theta_examples() {
        let s3 = Graph::star(3).unwrap();
        let whole = enumerate_copies(&s3, &PatternGraph::from_name("S3").unwrap());
        assert_eq!(theta(&s3, &whole[0]).unwrap(), 3);
        let edges = enumerate_copies(&s3, &PatternGraph::from_name("K2").unwrap());
        assert!(edges.iter().all(|c| theta(&s3, c).unwrap() == 3));
        let k5 = Graph::complete(5).unwrap();
        let tri = enumerate_copies(&k5, &PatternGraph::from_name("K3").unwrap());
        assert!(tri.iter().all(|c| theta(&k5, c).unwrap() == 4));
        let p3 = PatternGraph::from_name("E2").unwrap();
        let no_dom = enumerate_copies(&s3, &p3);
        assert!(matches!(theta(&s3, &no_dom[0]), Err(Error::NoDominatingVertex)));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&Graph::cycle(5).unwrap(), set(&[0, 1])).unwrap(), 5);
        assert_eq!(gamma(&Graph::path(4).unwrap(), set(&[1, 2])).unwrap(), 0);
        assert_eq!(gamma(&Graph::complete(4).unwrap(), set(&[0, 1, 2])).unwrap(), 4);
        // bowtie: the shared vertex lies on triangles only
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(gamma(&bowtie, set(&[2])).unwrap(), 3);
        assert_eq!(gamma(&bowtie, set(&[1, 2])).unwrap(), 3);
        assert_eq!(gamma(&Graph::petersen(), set(&[0, 1])).unwrap(), 9);
    }
}
