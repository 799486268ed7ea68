//! Localized inequalities, their equality characterizations, and the
//! non-localized bounds derived from them.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bitset::VertexSet;
use crate::cliques::{clique_number, count_cliques, enumerate_cliques};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::{count_copies, count_copies_in_clique, enumerate_copies, PatternGraph};
use crate::rational::{binom_q, ExactRational};
use crate::real::{binom2_root, gen_binom_quadratic, RealValue, SurdSum};
use crate::size::{alpha, beta, longest_path, theta};
use crate::weights::{weight_alpha, weight_path_order, weight_path_size, weight_star};

/// Every inequality the verifier knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    LocalZykov,
    LocalLuoOrder,
    LocalLuoSize,
    LocalStar,
    StarCliqueN,
    StarCliqueM,
    LocalHypergraph,
    Zykov,
    Luo,
    CcMex,
    WoodN,
    WoodM,
    Kr22,
    LovaszKk,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::LocalZykov,
        TheoremId::LocalLuoOrder,
        TheoremId::LocalLuoSize,
        TheoremId::LocalStar,
        TheoremId::StarCliqueN,
        TheoremId::StarCliqueM,
        TheoremId::LocalHypergraph,
        TheoremId::Zykov,
        TheoremId::Luo,
        TheoremId::CcMex,
        TheoremId::WoodN,
        TheoremId::WoodM,
        TheoremId::Kr22,
        TheoremId::LovaszKk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::LocalZykov => "local-zykov",
            TheoremId::LocalLuoOrder => "local-luo-order",
            TheoremId::LocalLuoSize => "local-luo-size",
            TheoremId::LocalStar => "local-star",
            TheoremId::StarCliqueN => "star-clique-n",
            TheoremId::StarCliqueM => "star-clique-m",
            TheoremId::LocalHypergraph => "local-hypergraph",
            TheoremId::Zykov => "zykov",
            TheoremId::Luo => "luo",
            TheoremId::CcMex => "cc-mex",
            TheoremId::WoodN => "wood-n",
            TheoremId::WoodM => "wood-m",
            TheoremId::Kr22 => "kr22",
            TheoremId::LovaszKk => "lovasz-kk",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| invalid(format!("unknown theorem `{s}`")))
    }

    /// Non-localized statements, checked against a clique count.
    pub fn is_derived(self) -> bool {
        matches!(
            self,
            TheoremId::Zykov
                | TheoremId::Luo
                | TheoremId::CcMex
                | TheoremId::WoodN
                | TheoremId::WoodM
                | TheoremId::Kr22
                | TheoremId::LovaszKk
        )
    }

    /// Statements about hypergraphs rather than graphs.
    pub fn is_hypergraph(self) -> bool {
        matches!(self, TheoremId::LocalHypergraph | TheoremId::Kr22)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by all theorems; each theorem reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub t: Option<usize>,
    pub u: Option<usize>,
    pub r: Option<usize>,
    pub pattern: Option<PatternGraph>,
    pub q: Option<usize>,
    pub i: Option<usize>,
    pub x_cap: Option<ExactRational>,
}

impl Params {
    pub fn t(t: usize) -> Self {
        Params { t: Some(t), ..Params::default() }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_u(mut self, u: usize) -> Self {
        self.u = Some(u);
        self
    }

    pub fn star(pattern: PatternGraph, u: usize) -> Self {
        Params { t: Some(pattern.order()), u: Some(u), pattern: Some(pattern), ..Params::default() }
    }

    pub fn hyper(t: usize, i: usize) -> Self {
        Params { t: Some(t), i: Some(i), ..Params::default() }
    }

    fn need(&self, value: Option<usize>, name: &str, theorem: TheoremId) -> Result<usize> {
        value.ok_or_else(|| invalid(format!("{theorem} needs parameter `{name}`")))
    }

    fn need_t(&self, theorem: TheoremId, min: usize) -> Result<usize> {
        let t = self.need(self.t, "t", theorem)?;
        if t < min {
            return Err(invalid(format!("{theorem} needs t >= {min}, got {t}")));
        }
        Ok(t)
    }

    fn need_r(&self, theorem: TheoremId) -> Result<usize> {
        let r = self.need(self.r, "r", theorem)?;
        if r == 0 {
            return Err(invalid(format!("{theorem} needs r >= 1")));
        }
        Ok(r)
    }
}

/// A sum or bound: exact rational, exact surd, or tolerance-tagged float.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(ExactRational),
    Surd(SurdSum),
    Real(RealValue),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64(),
            Value::Surd(s) => s.to_f64(),
            Value::Real(r) => r.value,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactRational> {
        match self {
            Value::Exact(q) => Some(q),
            _ => None,
        }
    }

    fn to_surd(&self) -> Option<SurdSum> {
        match self {
            Value::Exact(q) => Some(SurdSum::rational(q.clone())),
            Value::Surd(s) => Some(s.clone()),
            Value::Real(_) => None,
        }
    }

    /// `self - other`, exact whenever both sides are.
    pub fn minus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            _ => match (self.to_surd(), other.to_surd()) {
                (Some(a), Some(b)) => {
                    let mut d = a;
                    d.add(&b.scaled(&ExactRational::from_integer(-1)));
                    match d.is_rational() {
                        Some(q) => Value::Exact(q),
                        None => Value::Surd(d),
                    }
                }
                _ => Value::Real(RealValue::new(self.to_f64() - other.to_f64())),
            },
        }
    }

    /// Exact comparison when both sides are exact; otherwise within the
    /// absolute tolerance of the float side.
    pub fn compare(&self, other: &Value) -> Ordering {
        match (self.to_surd(), other.to_surd()) {
            (Some(a), Some(b)) => a.cmp_exact(&b),
            _ => {
                let diff = self.to_f64() - other.to_f64();
                if diff.abs() <= crate::real::ABS_TOL {
                    Ordering::Equal
                } else if diff < 0.0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Surd(s) => write!(f, "{:.9}", s.to_f64()),
            Value::Real(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Ok,
    Violation,
    NotApplicable,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Violation => "VIOLATION",
            Status::NotApplicable => "NOT-APPLICABLE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking one theorem on one graph or hypergraph.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// graph6 string, or the edge list of a hypergraph.
    pub graph6: String,
    pub theorem: TheoremId,
    pub params: Params,
    pub sum: Value,
    pub bound: Value,
    pub slack: Value,
    pub equality: bool,
    /// `None` when the statement has no equality characterization at these parameters.
    pub characterization: Option<bool>,
    pub agreement: bool,
    pub status: Status,
    /// Vertices of a heaviest copy, kept when the bound fails.
    pub witness: Option<Vec<usize>>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        key: String,
        theorem: TheoremId,
        params: Params,
        sum: Value,
        bound: Value,
        characterization: Option<bool>,
        witness: Option<Vec<usize>>,
    ) -> Self {
        let order = sum.compare(&bound);
        VerificationReport::decided(key, theorem, params, sum, bound, order, characterization, witness)
    }

    /// Like `assemble`, with the comparison of sum and bound already decided.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn decided(
        key: String,
        theorem: TheoremId,
        params: Params,
        sum: Value,
        bound: Value,
        order: Ordering,
        characterization: Option<bool>,
        witness: Option<Vec<usize>>,
    ) -> Self {
        let slack = bound.minus(&sum);
        let equality = order == Ordering::Equal;
        let status = if order == Ordering::Greater { Status::Violation } else { Status::Ok };
        let agreement = characterization.map_or(true, |c| c == equality);
        VerificationReport {
            graph6: key,
            theorem,
            params,
            sum,
            bound,
            slack,
            equality,
            characterization,
            agreement,
            status,
            witness: if status == Status::Violation { witness } else { None },
        }
    }

    /// No violation and no disagreement between equality and characterization.
    pub fn is_clean(&self) -> bool {
        self.status != Status::Violation && self.agreement
    }
}

/// Weights of every copy in the family a localized theorem sums over.
fn copy_weights(g: &Graph, theorem: TheoremId, params: &Params) -> Result<Vec<(VertexSet, ExactRational)>> {
    let mut out = Vec::new();
    match theorem {
        TheoremId::LocalZykov => {
            let t = params.need_t(theorem, 2)?;
            for c in enumerate_cliques(g, t) {
                out.push((c, weight_alpha(alpha(g, c)?, t)?));
            }
        }
        TheoremId::LocalLuoOrder => {
            let t = params.need_t(theorem, 2)?;
            for c in enumerate_cliques(g, t) {
                out.push((c, weight_path_order(beta(g, c)?, t)?));
            }
        }
        TheoremId::LocalLuoSize => {
            let t = params.need_t(theorem, 3)?;
            for c in enumerate_cliques(g, t) {
                out.push((c, weight_path_size(beta(g, c)?, t)?));
            }
        }
        TheoremId::LocalStar | TheoremId::StarCliqueN | TheoremId::StarCliqueM => {
            let (h, u) = star_setup(theorem, params)?;
            let t = h.order();
            for copy in enumerate_copies(g, &h) {
                out.push((copy.vertices, weight_star(theta(g, &copy)?, t, u)?));
            }
        }
        _ => return Err(invalid(format!("{theorem} is not a localized graph inequality"))),
    }
    Ok(out)
}

fn star_setup(theorem: TheoremId, params: &Params) -> Result<(PatternGraph, usize)> {
    match theorem {
        TheoremId::StarCliqueN => {
            let t = params.need_t(theorem, 1)?;
            Ok((PatternGraph::new(format!("K{t}"), Graph::complete(t)?)?, 1))
        }
        TheoremId::StarCliqueM => {
            let t = params.need_t(theorem, 2)?;
            Ok((PatternGraph::new(format!("K{t}"), Graph::complete(t)?)?, 2))
        }
        _ => {
            let h = params
                .pattern
                .clone()
                .ok_or_else(|| invalid("local-star needs a pattern"))?;
            let u = params.need(params.u, "u", theorem)?;
            if h.dom_count() == 0 {
                return Err(Error::NoDominatingVertex);
            }
            if u < 1 || u > h.dom_count() {
                return Err(invalid(format!(
                    "local-star needs 1 <= u <= dom(H) = {} (u = {u})",
                    h.dom_count()
                )));
            }
            Ok((h, u))
        }
    }
}

/// The localized weighted sum (or, for derived statements, the clique count).
pub fn weighted_sum(g: &Graph, theorem: TheoremId, params: &Params) -> Result<Value> {
    if theorem.is_derived() {
        let t = params.need_t(theorem, 1)?;
        return Ok(Value::Exact(ExactRational::from(count_cliques(g, t))));
    }
    let weights = copy_weights(g, theorem, params)?;
    Ok(Value::Exact(weights.into_iter().map(|(_, w)| w).sum()))
}

/// Right-hand side of the inequality.
pub fn bound_value(g: &Graph, theorem: TheoremId, params: &Params) -> Result<Value> {
    let n = ExactRational::from(g.n());
    let m = ExactRational::from(g.m());
    let value = match theorem {
        TheoremId::LocalZykov => n.pow(params.need_t(theorem, 2)? as u32),
        TheoremId::LocalLuoOrder => n / ExactRational::from(params.need_t(theorem, 2)?),
        TheoremId::LocalLuoSize => m / binom_q(params.need_t(theorem, 3)? as u64, 2),
        TheoremId::LocalStar | TheoremId::StarCliqueN | TheoremId::StarCliqueM => {
            let (h, u) = star_setup(theorem, params)?;
            let t = h.order();
            let rest = h.remove_dominating(u)?;
            let per = ExactRational::from_big(count_copies_in_clique(&rest, t - u))
                / binom_q(h.dom_count() as u64, u as u64);
            per * ExactRational::from(count_cliques(g, u))
        }
        TheoremId::Zykov => {
            let (t, r) = (params.need_t(theorem, 1)?, params.need_r(theorem)?);
            binom_q(r as u64, t as u64) * (n / ExactRational::from(r)).pow(t as u32)
        }
        TheoremId::Luo | TheoremId::WoodN => {
            let (t, r) = (params.need_t(theorem, 1)?, params.need_r(theorem)?);
            n / ExactRational::from(r) * binom_q(r as u64, t as u64)
        }
        TheoremId::CcMex | TheoremId::WoodM => {
            let min_t = if theorem == TheoremId::CcMex { 3 } else { 2 };
            let (t, r) = (params.need_t(theorem, min_t)?, params.need_r(theorem)?);
            if r < 2 {
                return Err(invalid(format!("{theorem} needs r >= 2")));
            }
            m / binom_q(r as u64, 2) * binom_q(r as u64, t as u64)
        }
        TheoremId::LovaszKk => {
            let t = params.need_t(theorem, 2)?;
            let x = binom2_root(g.m() as u64);
            let b = gen_binom_quadratic(&x, t as u64);
            return Ok(match b.is_rational() {
                Some(q) => Value::Exact(q),
                None => Value::Surd(b),
            });
        }
        TheoremId::LocalHypergraph | TheoremId::Kr22 => {
            return Err(invalid(format!("{theorem} applies to hypergraphs")));
        }
    };
    Ok(Value::Exact(value))
}

/// Characterization of the equality case, where the statement provides one.
pub fn characterization(g: &Graph, theorem: TheoremId, params: &Params) -> Result<Option<bool>> {
    let c = match theorem {
        TheoremId::LocalZykov => Some(g.is_balanced_complete_multipartite(params.need_t(theorem, 2)?)),
        TheoremId::LocalLuoOrder => Some(g.is_disjoint_union_of_cliques(params.need_t(theorem, 2)?, false)),
        TheoremId::LocalLuoSize => Some(g.is_disjoint_union_of_cliques(params.need_t(theorem, 3)?, true)),
        TheoremId::LocalStar | TheoremId::StarCliqueN | TheoremId::StarCliqueM => {
            let (h, u) = star_setup(theorem, params)?;
            Some(star_characterization(g, &h, u))
        }
        TheoremId::Zykov | TheoremId::LovaszKk => None,
        TheoremId::Luo => {
            let (t, r) = (params.need_t(theorem, 1)?, params.need_r(theorem)?);
            (t >= 2).then(|| copies_of_kr(g, r, false))
        }
        TheoremId::WoodN => {
            let (t, r) = (params.need_t(theorem, 1)?, params.need_r(theorem)?);
            (t >= 3).then(|| copies_of_kr(g, r, false))
        }
        TheoremId::CcMex | TheoremId::WoodM => {
            let (t, r) = (params.need_t(theorem, 2)?, params.need_r(theorem)?);
            (t >= 3).then(|| copies_of_kr(g, r, true))
        }
        TheoremId::LocalHypergraph | TheoremId::Kr22 => None,
    };
    Ok(c)
}

/// `G` is a disjoint union of copies of `K_r`, optionally with isolated vertices.
fn copies_of_kr(g: &Graph, r: usize, allow_isolated: bool) -> bool {
    g.components().into_iter().all(|c| {
        (c.len() == r && g.is_clique(c)) || (allow_isolated && c.len() == 1)
    })
}

/// The equality case split for star weights.
pub fn star_characterization(g: &Graph, h: &PatternGraph, u: usize) -> bool {
    let t = h.order();
    if u == t {
        // H is complete and every copy has weight one
        return true;
    }
    match h.star_leaves() {
        Some(leaves) if t >= 3 && leaves == t - 1 => g.min_degree() + 1 >= t,
        Some(1) if u == 1 => g.components_regular_no_isolated(),
        _ => g.components().into_iter().all(|c| {
            let sub = g.induced(c);
            clique_number(&sub) < u || (g.is_clique(c) && c.len() >= t)
        }),
    }
}

fn heaviest(weights: &[(VertexSet, ExactRational)]) -> Option<Vec<usize>> {
    weights
        .iter()
        .max_by(|a, b| a.1.cmp(&b.1))
        .map(|(c, _)| c.to_vec())
}

/// Checks a localized inequality (derived statements are routed to [`verify_derived`]).
pub fn verify(g: &Graph, theorem: TheoremId, params: &Params) -> Result<VerificationReport> {
    if theorem.is_derived() {
        return verify_derived(g, theorem, params);
    }
    if theorem.is_hypergraph() {
        return Err(invalid(format!("{theorem} applies to hypergraphs")));
    }
    let weights = copy_weights(g, theorem, params)?;
    let witness = heaviest(&weights);
    let sum = Value::Exact(weights.into_iter().map(|(_, w)| w).sum());
    let bound = bound_value(g, theorem, params)?;
    let ch = characterization(g, theorem, params)?;
    Ok(VerificationReport::assemble(graph6::encode(g), theorem, params.clone(), sum, bound, ch, witness))
}

/// Whether `g` satisfies the hypothesis of a derived statement.
pub fn hypothesis_holds(g: &Graph, theorem: TheoremId, params: &Params) -> Result<bool> {
    Ok(match theorem {
        TheoremId::Zykov => clique_number(g) <= params.need_r(theorem)?,
        TheoremId::Luo | TheoremId::CcMex => longest_path(g) < params.need_r(theorem)?,
        TheoremId::WoodN | TheoremId::WoodM => g.max_degree() < params.need_r(theorem)?,
        TheoremId::LovaszKk => true,
        _ => return Err(invalid(format!("{theorem} has no hypothesis check on graphs"))),
    })
}

/// Checks a non-localized bound on the number of `t`-cliques; graphs outside
/// the hypothesis are reported as not applicable.
pub fn verify_derived(g: &Graph, theorem: TheoremId, params: &Params) -> Result<VerificationReport> {
    if !theorem.is_derived() || theorem == TheoremId::Kr22 {
        return Err(invalid(format!("{theorem} is not a derived graph bound")));
    }
    let t = params.need_t(theorem, 1)?;
    if let (Some(r), TheoremId::Luo | TheoremId::CcMex) = (params.r, theorem) {
        if t > r {
            return Err(invalid(format!("{theorem} needs t <= r (t = {t}, r = {r})")));
        }
    }
    let sum = weighted_sum(g, theorem, params)?;
    let bound = bound_value(g, theorem, params)?;
    let key = graph6::encode(g);
    if !hypothesis_holds(g, theorem, params)? {
        let slack = bound.minus(&sum);
        return Ok(VerificationReport {
            graph6: key,
            theorem,
            params: params.clone(),
            sum,
            bound,
            slack,
            equality: false,
            characterization: None,
            agreement: true,
            status: Status::NotApplicable,
            witness: None,
        });
    }
    let ch = characterization(g, theorem, params)?;
    let mut report = VerificationReport::assemble(key, theorem, params.clone(), sum, bound, ch, None);
    if let Some(chain) = derivation_chain(g, theorem, params)? {
        if !chain.holds() {
            report.status = Status::Violation;
        }
    }
    Ok(report)
}

/// The two-line derivation of a non-localized bound from a localized one:
/// `count * floor <= local sum <= local bound`, and `local bound / floor`
/// must equal the stated bound.
#[derive(Clone, Debug)]
pub struct DerivationChain {
    pub local: TheoremId,
    pub count: ExactRational,
    pub weight_floor: ExactRational,
    pub local_sum: ExactRational,
    pub local_bound: ExactRational,
    pub derived_from_local: ExactRational,
    pub derived_direct: ExactRational,
}

impl DerivationChain {
    pub fn holds(&self) -> bool {
        &self.count * &self.weight_floor <= self.local_sum
            && self.local_sum <= self.local_bound
            && self.derived_from_local == self.derived_direct
    }
}

/// Recomputes a derived bound from its localized parent; `None` when the
/// parameters fall outside the range where the derivation applies.
pub fn derivation_chain(g: &Graph, theorem: TheoremId, params: &Params) -> Result<Option<DerivationChain>> {
    let t = params.need_t(theorem, 1)?;
    let r = match theorem {
        TheoremId::Zykov | TheoremId::Luo | TheoremId::CcMex | TheoremId::WoodN | TheoremId::WoodM => {
            params.need_r(theorem)?
        }
        _ => return Ok(None),
    };
    if t > r {
        return Ok(None);
    }
    let (local, floor) = match theorem {
        TheoremId::Zykov if t >= 2 => (TheoremId::LocalZykov, weight_alpha(r, t)?),
        TheoremId::Luo if t >= 2 => (TheoremId::LocalLuoOrder, weight_path_order(r - 1, t)?),
        TheoremId::CcMex if t >= 3 => (TheoremId::LocalLuoSize, weight_path_size(r - 1, t)?),
        TheoremId::WoodN => (TheoremId::StarCliqueN, weight_star(r - 1, t, 1)?),
        TheoremId::WoodM if t >= 2 => (TheoremId::StarCliqueM, weight_star(r - 1, t, 2)?),
        _ => return Ok(None),
    };
    let local_params = Params::t(t);
    let local_sum = weighted_sum(g, local, &local_params)?.as_exact().unwrap().to_owned();
    let local_bound = bound_value(g, local, &local_params)?.as_exact().unwrap().to_owned();
    let derived_direct = bound_value(g, theorem, params)?.as_exact().unwrap().to_owned();
    Ok(Some(DerivationChain {
        local,
        count: ExactRational::from(count_cliques(g, t)),
        derived_from_local: &local_bound / &floor,
        weight_floor: floor,
        local_sum,
        local_bound,
        derived_direct,
    }))
}

/// Construction mode: fixed order or fixed size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Vertices,
    Edges,
}

/// Copies of `H` in the disjoint-cliques construction, counted two ways, and
/// the upper bound obtained from the star inequality.
#[derive(Clone, Debug)]
pub struct ConstructionCheck {
    pub pattern: String,
    pub r: usize,
    pub budget: usize,
    pub mode: Budget,
    /// Number of disjoint `K_r` used.
    pub k: usize,
    pub direct: usize,
    pub closed_form: ExactRational,
    pub upper_bound: ExactRational,
}

impl ConstructionCheck {
    pub fn agrees(&self) -> bool {
        ExactRational::from(self.direct) == self.closed_form
    }

    /// `construction <= value <= upper bound`.
    pub fn sandwiches(&self, value: usize) -> bool {
        let v = ExactRational::from(value);
        self.direct <= value && v <= self.upper_bound
    }
}

/// Counts copies of `H` in `k K_r` directly and by choosing `u` dominating
/// vertices, `t - u` companions and an embedding of the rest (`u = 1` for a
/// vertex budget, `u = 2` for an edge budget).
pub fn check_asymptotic_construction(
    h: &PatternGraph,
    r: usize,
    budget: usize,
    mode: Budget,
) -> Result<ConstructionCheck> {
    let t = h.order();
    let u = match mode {
        Budget::Vertices => 1,
        Budget::Edges => 2,
    };
    if h.dom_count() < u {
        return Err(invalid(format!("{} needs at least {u} dominating vertices", h.name())));
    }
    if r < t {
        return Err(invalid(format!("construction needs r >= t (r = {r}, t = {t})")));
    }
    let block = match mode {
        Budget::Vertices => r,
        Budget::Edges => r * (r - 1) / 2,
    };
    let k = budget / block;
    let g = if k == 0 { Graph::empty(0)? } else { Graph::complete(r)?.repeat(k)? };
    let rest = h.remove_dominating(u)?;
    let embed = ExactRational::from_big(count_copies_in_clique(&rest, t - u));
    let dom_choices = binom_q(h.dom_count() as u64, u as u64);
    let closed_form = ExactRational::from(k)
        * binom_q(r as u64, u as u64)
        * binom_q((r - u) as u64, (t - u) as u64)
        * &embed
        / &dom_choices;
    let upper_bound = ExactRational::from(budget) * binom_q((r - u) as u64, (t - u) as u64) * embed / dom_choices;
    Ok(ConstructionCheck {
        pattern: h.name().into(),
        r,
        budget,
        mode,
        k,
        direct: count_copies(&g, h),
        closed_form,
        upper_bound,
    })
}
