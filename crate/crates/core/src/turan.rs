//! Exhaustive generalized Turán numbers and counterexample searches for the
//! open localized inequalities.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::cliques::enumerate_cliques;
use crate::error::{invalid, Error, Result};
use crate::generate::{enumerate_graphs, enumerate_graphs_by_edges, enumerate_graphs_where};
use crate::graph::Graph;
use crate::graph6;
use crate::hypergraph::{enumerate_uniform_hypergraphs, hypergraph_m_sum, UniformHypergraph};
use crate::pattern::{contains_copy, count_copies, PatternGraph};
use crate::rational::ExactRational;
use crate::real::SurdSum;
use crate::size::{alpha, gamma};
use crate::verify::Value;
use crate::weights::{weight_cycle_order, weight_cycle_size, weight_frohmader};

/// Largest vertex budget for `ex` queries.
pub const MAX_TURAN_ORDER: usize = 8;
/// Largest edge budget for `mex` queries.
pub const MAX_TURAN_SIZE: usize = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TuranMode {
    /// Maximum over graphs on `n` vertices.
    Ex,
    /// Maximum over graphs with `m` edges.
    Mex,
}

impl TuranMode {
    pub fn name(self) -> &'static str {
        match self {
            TuranMode::Ex => "ex",
            TuranMode::Mex => "mex",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "ex" => Ok(TuranMode::Ex),
            "mex" => Ok(TuranMode::Mex),
            _ => Err(invalid(format!("unknown Turán mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TuranQuery {
    pub mode: TuranMode,
    pub budget: usize,
    pub target: PatternGraph,
    pub forbidden: PatternGraph,
}

impl fmt::Display for TuranQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {}, {})", self.mode.name(), self.budget, self.target.name(), self.forbidden.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranResult {
    pub value: usize,
    /// One maximizer per isomorphism class, sorted by graph6.
    pub extremal: Vec<Graph>,
    pub extremal_graph6: Vec<String>,
    pub checked_classes: usize,
}

/// `ex(n, H, F)` or `mex(m, H, F)` by exhaustive search.
pub fn turan_number(query: &TuranQuery) -> Result<TuranResult> {
    let f = &query.forbidden;
    let candidates = match query.mode {
        TuranMode::Ex => {
            if query.budget > MAX_TURAN_ORDER {
                return Err(Error::CapExceeded { what: "vertex budget", value: query.budget, cap: MAX_TURAN_ORDER });
            }
            enumerate_graphs_where(query.budget, |g| !contains_copy(g, f))?
        }
        TuranMode::Mex => {
            if query.budget > MAX_TURAN_SIZE {
                return Err(Error::CapExceeded { what: "edge budget", value: query.budget, cap: MAX_TURAN_SIZE });
            }
            if query.target.has_isolated_vertex() {
                return Err(invalid("edge-budget queries need a target without isolated vertices"));
            }
            let mut all = enumerate_graphs_by_edges(query.budget, crate::MAX_VERTICES)?;
            all.retain(|g| !contains_copy(g, f));
            all
        }
    };
    let mut value = 0;
    let mut extremal = Vec::new();
    for g in &candidates {
        let c = count_copies(g, &query.target);
        match c.cmp(&value) {
            Ordering::Greater => {
                value = c;
                extremal.clear();
                extremal.push(g.clone());
            }
            Ordering::Equal => extremal.push(g.clone()),
            Ordering::Less => {}
        }
    }
    for g in &extremal {
        if count_copies(g, f) != 0 {
            return Err(invalid(format!("generated graph {} contains the forbidden pattern", graph6::encode(g))));
        }
    }
    let mut keyed: Vec<(String, Graph)> = extremal.into_iter().map(|g| (graph6::encode(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let (extremal_graph6, extremal) = keyed.into_iter().unzip();
    Ok(TuranResult { value, extremal, extremal_graph6, checked_classes: candidates.len() })
}

/// The open localized inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConjectureId {
    /// `sum C(alpha, 2)^(t/2) / C(alpha, t) <= m^(t/2)`.
    Frohmader,
    /// `sum (gamma - 1) / C(gamma, t) <= n - 1`.
    CycleOrder,
    /// `sum C(gamma, 2) / C(gamma, t) <= m`.
    CycleSize,
    /// `sum 1 / C(x(T) - q, t - q) <= m / C(t, q)` for uniform hypergraphs.
    HypergraphM,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 4] =
        [ConjectureId::Frohmader, ConjectureId::CycleOrder, ConjectureId::CycleSize, ConjectureId::HypergraphM];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::Frohmader => "frohmader",
            ConjectureId::CycleOrder => "cycle-order",
            ConjectureId::CycleSize => "cycle-size",
            ConjectureId::HypergraphM => "hypergraph-m",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| invalid(format!("unknown conjecture `{s}`")))
    }

    /// Whether an equality case is conjectured.
    pub fn has_characterization(self) -> bool {
        matches!(self, ConjectureId::CycleOrder | ConjectureId::CycleSize)
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Search space for [`search_conjecture`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCaps {
    /// Graphs (or hypergraphs) on `1..=n_max` vertices.
    pub n_max: usize,
    /// Additionally, graphs with `1..=m` edges and no isolated vertices.
    pub m_max: Option<usize>,
    pub t_min: usize,
    pub t_max: usize,
    /// Uniformity for hypergraph searches.
    pub q: usize,
}

impl SearchCaps {
    pub fn graphs(n_max: usize, t_min: usize, t_max: usize) -> Self {
        SearchCaps { n_max, m_max: None, t_min, t_max, q: 3 }
    }

    pub fn with_sizes(mut self, m_max: usize) -> Self {
        self.m_max = Some(m_max);
        self
    }

    pub fn hypergraphs(n_max: usize, q: usize) -> Self {
        SearchCaps { n_max, m_max: None, t_min: q, t_max: n_max, q }
    }
}

/// One evaluated instance of a conjectured inequality.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    /// graph6 for graphs, the hypergraph's edge listing otherwise.
    pub key: String,
    pub t: usize,
    pub i: Option<usize>,
    pub sum: Value,
    pub bound: Value,
    pub order: Ordering,
    /// The conjectured equality case, where one is stated.
    pub characterization: Option<bool>,
    /// `t`-cliques whose cycle weight is undefined (`gamma < t`).
    pub undefined: usize,
}

impl Finding {
    pub fn is_violation(&self) -> bool {
        self.order == Ordering::Greater
    }

    pub fn is_tight(&self) -> bool {
        self.order == Ordering::Equal
    }

    /// Tight with no `t`-cliques at all.
    pub fn is_degenerate(&self) -> bool {
        self.is_tight() && self.sum.to_f64() == 0.0
    }
}

/// Aggregated result of a search.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SearchOutcome {
    pub violations: Vec<Finding>,
    pub tight: Vec<Finding>,
    /// Instances where the conjectured equality case holds but the bound is not tight.
    pub characterization_not_tight: Vec<Finding>,
    pub checked: usize,
    /// Cliques with undefined cycle weight; excluded and weighted 0 alike.
    pub undefined_weights: usize,
    pub notes: Vec<String>,
}

impl SearchOutcome {
    pub fn absorb(&mut self, f: Finding) {
        self.checked += 1;
        self.undefined_weights += f.undefined;
        if f.is_violation() {
            self.violations.push(f);
        } else if f.is_tight() {
            self.tight.push(f);
        } else if f.characterization == Some(true) {
            self.characterization_not_tight.push(f);
        }
    }

    /// Tight cases where the conjectured equality case fails.
    pub fn tight_without_characterization(&self) -> Vec<&Finding> {
        self.tight.iter().filter(|f| f.characterization == Some(false)).collect()
    }

    pub fn merge(&mut self, other: SearchOutcome) {
        self.violations.extend(other.violations);
        self.tight.extend(other.tight);
        self.characterization_not_tight.extend(other.characterization_not_tight);
        self.checked += other.checked;
        self.undefined_weights += other.undefined_weights;
        self.notes.extend(other.notes);
    }

    /// Sorts every list by key then parameters, for reproducible output.
    pub fn normalize(&mut self) {
        for list in [&mut self.violations, &mut self.tight, &mut self.characterization_not_tight] {
            list.sort_by(|a, b| (&a.key, a.t, a.i).cmp(&(&b.key, b.t, b.i)));
        }
        self.notes.sort();
        self.notes.dedup();
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every block with an edge is a complete graph on at least `t` vertices.
/// Bridges count as blocks; isolated vertices are ignored.
pub fn blocks_are_large_cliques(g: &Graph, t: usize) -> bool {
    g.blocks().into_iter().filter(|b| b.len() >= 2).all(|b| b.len() >= t && g.is_clique(b))
}

/// Evaluates a graph conjecture on one graph and one `t >= 2`.
pub fn evaluate_graph(c: ConjectureId, g: &Graph, t: usize) -> Result<Finding> {
    if t < 2 {
        return Err(invalid(format!("conjectures need t >= 2 (t = {t})")));
    }
    let key = graph6::encode(g);
    match c {
        ConjectureId::Frohmader => {
            let mut sum = SurdSum::zero();
            for clique in enumerate_cliques(g, t) {
                sum.add(&weight_frohmader(alpha(g, clique)?, t)?);
            }
            let m = g.m() as u64;
            let mut bound = SurdSum::zero();
            let whole = ExactRational::from(m).pow(t as u32 / 2);
            bound.add_term(whole, if t % 2 == 0 { 1 } else { m });
            let order = sum.cmp_exact(&bound);
            Ok(Finding {
                key,
                t,
                i: None,
                sum: Value::Surd(sum),
                bound: Value::Surd(bound),
                order,
                characterization: None,
                undefined: 0,
            })
        }
        ConjectureId::CycleOrder | ConjectureId::CycleSize => {
            let weight = if c == ConjectureId::CycleOrder { weight_cycle_order } else { weight_cycle_size };
            let mut sum = ExactRational::zero();
            let mut undefined = 0;
            for clique in enumerate_cliques(g, t) {
                match weight(gamma(g, clique)?, t) {
                    Ok(w) => sum += w,
                    Err(Error::UndefinedWeight { .. }) => undefined += 1,
                    Err(e) => return Err(e),
                }
            }
            let bound = if c == ConjectureId::CycleOrder {
                ExactRational::from(g.n() as i64 - 1)
            } else {
                ExactRational::from(g.m())
            };
            let order = sum.cmp(&bound);
            Ok(Finding {
                key,
                t,
                i: None,
                sum: Value::Exact(sum),
                bound: Value::Exact(bound),
                order,
                characterization: Some(blocks_are_large_cliques(g, t)),
                undefined,
            })
        }
        ConjectureId::HypergraphM => Err(invalid("hypergraph-m is evaluated on hypergraphs")),
    }
}

/// Evaluates the hypergraph conjecture for one `(t, i)`.
pub fn evaluate_hypergraph(h: &UniformHypergraph, t: usize, i: usize) -> Result<Finding> {
    let (sum, bound, order) = hypergraph_m_sum(h, t, i)?;
    Ok(Finding {
        key: format!("{h}"),
        t,
        i: Some(i),
        sum,
        bound: Value::Exact(bound),
        order,
        characterization: None,
        undefined: 0,
    })
}

/// The graphs searched for a graph conjecture, deduplicated across the
/// vertex-indexed and edge-indexed families.
pub fn graph_search_space(caps: &SearchCaps) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=caps.n_max {
        out.extend(enumerate_graphs(n)?);
    }
    if let Some(m_max) = caps.m_max {
        for m in 1..=m_max {
            for g in enumerate_graphs_by_edges(m, crate::MAX_VERTICES)? {
                // isolated-vertex-free graphs within the order cap already appear above
                if g.n() > caps.n_max {
                    out.push(g);
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates a conjecture over its whole search space.
pub fn search_conjecture(c: ConjectureId, caps: &SearchCaps) -> Result<SearchOutcome> {
    let mut outcome = SearchOutcome::default();
    if c == ConjectureId::HypergraphM {
        for n in 1..=caps.n_max {
            if n < caps.q {
                continue;
            }
            for h in enumerate_uniform_hypergraphs(n, caps.q)? {
                search_hypergraph(&h, caps, &mut outcome);
            }
        }
    } else {
        for g in graph_search_space(caps)? {
            for t in caps.t_min.max(2)..=caps.t_max {
                outcome.absorb(evaluate_graph(c, &g, t)?);
            }
        }
        note_conventions(c, &mut outcome);
    }
    outcome.normalize();
    Ok(outcome)
}

/// Evaluates every admissible `(t, i)` on one hypergraph.
pub fn search_hypergraph(h: &UniformHypergraph, caps: &SearchCaps, outcome: &mut SearchOutcome) {
    for t in caps.t_min.max(h.q())..=caps.t_max.min(h.n()) {
        for i in 1..h.q() {
            match evaluate_hypergraph(h, t, i) {
                Ok(f) => outcome.absorb(f),
                Err(e) => outcome.notes.push(format!("{h} (t = {t}, i = {i}): {e}")),
            }
        }
    }
}

/// Records how undefined cycle weights were treated.
pub fn note_conventions(c: ConjectureId, outcome: &mut SearchOutcome) {
    if matches!(c, ConjectureId::CycleOrder | ConjectureId::CycleSize) && outcome.undefined_weights > 0 {
        outcome.notes.push(format!(
            "{} cliques lie on no cycle of length >= t; excluding them and weighting them 0 give the same sums",
            outcome.undefined_weights
        ));
    }
}
