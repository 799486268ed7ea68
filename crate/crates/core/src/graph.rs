//! Simple undirected graphs on dense vertex ids with bit-set adjacency,
//! plus the structural predicates used by equality characterizations.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; the edge count is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], m: 0 })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bit-sets. The caller guarantees symmetry.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let twice: usize = adj.iter().map(|s| s.len()).sum();
        let g = Graph { n, adj, m: twice / 2 };
        debug_assert!(g.is_well_formed());
        g
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        self.m += 1;
        Ok(())
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    /// Returns a copy with `k` extra isolated vertices appended.
    pub fn with_isolated(&self, k: usize) -> Result<Self> {
        let n = self.n + k;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::EMPTY);
        Ok(Graph { n, adj, m: self.m })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::range(n).without(v);
        }
        g.m = n * n.saturating_sub(1) / 2;
        Ok(g)
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(crate::error::invalid("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Star with `leaves` leaves; the center is vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut label = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            label.extend(core::iter::repeat(p).take(size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if label[u] != label[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// The Petersen graph.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| VertexSet::from_bits(s.bits() << self.n)));
        Ok(Graph { n, adj, m: self.m + other.m })
    }

    /// `k` disjoint copies of `self`.
    pub fn repeat(&self, k: usize) -> Result<Self> {
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].above(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// True iff every pair of vertices in `s` is adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| v < self.n && s.without(v).is_subset(self.adj[v]))
    }

    /// Vertices adjacent to every member of `u_set`; never meets `u_set`.
    pub fn common_neighborhood(&self, u_set: VertexSet) -> Result<VertexSet> {
        if u_set.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(u_set)?;
        Ok(self.common_neighborhood_unchecked(u_set))
    }

    #[inline]
    pub(crate) fn common_neighborhood_unchecked(&self, u_set: VertexSet) -> VertexSet {
        u_set
            .iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.adj[v]))
            .difference(u_set)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.first() {
            let comp = self.reachable_within(v, self.vertices());
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Induced subgraph on `s`, relabelled in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let members = s.to_vec();
        let adj = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v].contains(w))
                    .fold(VertexSet::EMPTY, |acc, (j, _)| acc.with(j))
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Graph with vertex `v` deleted; remaining vertices keep their order.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v)))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph::from_adjacency(adj)
    }

    /// Checks the representation invariants.
    pub fn is_well_formed(&self) -> bool {
        let range = self.vertices();
        let twice: usize = self.adj.iter().map(|s| s.len()).sum();
        self.adj.len() == self.n
            && twice == 2 * self.m
            && (0..self.n).all(|v| {
                !self.adj[v].contains(v)
                    && self.adj[v].is_subset(range)
                    && self.adj[v].iter().all(|w| self.adj[w].contains(v))
            })
    }

    /// If `g` is a complete multipartite graph with equal part sizes and at
    /// least `min_parts` parts, returns the parts (ordered by smallest member).
    pub fn balanced_complete_multipartite_parts(&self, min_parts: usize) -> Option<Vec<VertexSet>> {
        let all = self.vertices();
        let mut parts = Vec::new();
        let mut left = all;
        while let Some(v) = left.first() {
            // the class of v under non-adjacency
            let class = all.difference(self.adj[v]);
            // non-adjacency must be transitive: every class member has the same non-neighborhood
            if class.iter().any(|w| all.difference(self.adj[w]) != class) {
                return None;
            }
            left = left.difference(class);
            parts.push(class);
        }
        let size = parts.first().map_or(0, |p| p.len());
        if parts.iter().any(|p| p.len() != size) || parts.len() < min_parts {
            return None;
        }
        Some(parts)
    }

    pub fn is_balanced_complete_multipartite(&self, min_parts: usize) -> bool {
        self.balanced_complete_multipartite_parts(min_parts).is_some()
    }

    /// Every component is complete and either has order `>= min_order` or
    /// (when `allow_isolated`) is a single vertex.
    pub fn is_disjoint_union_of_cliques(&self, min_order: usize, allow_isolated: bool) -> bool {
        self.components().into_iter().all(|c| {
            self.is_clique(c) && (c.len() >= min_order || (allow_isolated && c.len() == 1))
        })
    }

    /// Minimum degree at least one and each component regular.
    pub fn components_regular_no_isolated(&self) -> bool {
        self.min_degree() >= 1
            && self.components().into_iter().all(|c| {
                let d = self.adj[c.first().unwrap()].len();
                c.iter().all(|v| self.adj[v].len() == d)
            })
    }

    /// Blocks: maximal 2-connected subgraphs, bridges (as 2-vertex blocks) and
    /// isolated vertices (as 1-vertex blocks), in discovery order.
    pub fn blocks(&self) -> Vec<VertexSet> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<VertexSet>,
        }
        fn dfs(st: &mut State<'_>, v: usize, parent: Option<usize>) {
            st.time += 1;
            st.disc[v] = st.time;
            st.low[v] = st.time;
            for w in st.g.adj[v] {
                if st.disc[w] == 0 {
                    st.stack.push((v, w));
                    dfs(st, w, Some(v));
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] >= st.disc[v] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = st.stack.pop() {
                            block = block.with(a).with(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        st.out.push(block);
                    }
                } else if Some(w) != parent && st.disc[w] < st.disc[v] {
                    st.stack.push((v, w));
                    st.low[v] = st.low[v].min(st.disc[w]);
                }
            }
        }
        let mut st = State {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..self.n {
            if st.disc[v] == 0 {
                if self.adj[v].is_empty() {
                    st.disc[v] = usize::MAX;
                    st.out.push(VertexSet::singleton(v));
                } else {
                    dfs(&mut st, v, None);
                }
            }
        }
        st.out
    }
}
