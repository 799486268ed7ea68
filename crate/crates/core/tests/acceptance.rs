//! Acceptance checks: one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use common::*;
use locweight_core::generate::{enumerate_graphs, enumerate_graphs_by_edges};
use locweight_core::hypergraph::{enumerate_uniform_hypergraphs, kr22_matches_lovasz, verify_local_kr22, UniformHypergraph};
use locweight_core::pattern::{count_copies, PatternGraph};
use locweight_core::rational::binom_q;
use locweight_core::size::{beta, gamma};
use locweight_core::turan::{search_conjecture, turan_number, ConjectureId, SearchCaps, SearchOutcome, TuranMode, TuranQuery};
use locweight_core::verify::{
    check_asymptotic_construction, derivation_chain, verify, verify_derived, Budget, Params, Status, TheoremId, Value,
};
use locweight_core::{ExactRational, Graph};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], summary: String) -> Self {
        let detail = match failures.first() {
            None => summary,
            Some(first) => format!("{summary}; {} failing checks, first: {first}", failures.len()),
        };
        Outcome { pass: failures.is_empty(), detail }
    }
}

fn pat(name: &str) -> PatternGraph {
    PatternGraph::from_name(name).unwrap()
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for (w, flag) in seen.iter_mut().enumerate() {
                if !*flag && g.has_edge(v, w) {
                    *flag = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        out.push(comp);
    }
    out
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)))
}

/// Non-adjacency is an equivalence relation with classes of one size, at least `t` of them.
fn oracle_balanced_multipartite(g: &Graph, t: usize) -> bool {
    let n = g.n();
    let same = |a: usize, b: usize| a == b || !g.has_edge(a, b);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if same(a, b) && same(b, c) && !same(a, c) {
                    return false;
                }
            }
        }
    }
    let sizes: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| same(a, b)).count()).collect();
    let parts = if n == 0 { 0 } else { n / sizes[0] };
    sizes.iter().all(|&s| s == sizes[0]) && parts >= t
}

fn oracle_disjoint_cliques(g: &Graph, t: usize, allow_isolated: bool) -> bool {
    components(g).iter().all(|c| (is_clique(g, c) && c.len() >= t) || (allow_isolated && c.len() == 1))
}

fn oracle_star_equality(g: &Graph, h: &Graph, u: usize) -> bool {
    let t = h.n();
    let is_star = t >= 2 && (0..t).any(|c| (0..t).all(|v| v == c || h.has_edge(c, v))) && h.m() == t - 1;
    if is_star && t >= 3 {
        return (0..g.n()).all(|v| g.neighbors(v).len() + 1 >= t);
    }
    if is_star && t == 2 && u == 1 {
        return components(g).iter().all(|c| {
            let d = g.neighbors(c[0]).len();
            d > 0 && c.iter().all(|&v| g.neighbors(v).len() == d)
        });
    }
    components(g).iter().all(|c| {
        let has_u_clique = oracle_cliques(g, u).iter().any(|k| k.iter().all(|v| c.contains(&v)));
        !has_u_clique || (is_clique(g, c) && c.len() >= t)
    })
}

fn is_exact(v: &Value) -> bool {
    matches!(v, Value::Exact(_))
}

fn criterion_1(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut equalities = 0;
    for g in graphs {
        for t in 2..=5 {
            let r = verify(g, TheoremId::LocalZykov, &Params::t(t)).unwrap();
            let expected = oracle_balanced_multipartite(g, t);
            equalities += usize::from(r.equality);
            if r.status != Status::Ok || !is_exact(&r.sum) || r.equality != expected || !r.agreement {
                failures.push(format!("{} t = {t}", r.graph6));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 120.0 {
        failures.push(format!("runtime {secs:.1}s"));
    }
    Outcome::new(&failures, format!("{} graphs, {equalities} equality cases, {secs:.2}s", graphs.len()))
}

fn criterion_2(graphs: &[Graph], sized: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in graphs {
        for t in 2..=4 {
            let r = verify(g, TheoremId::LocalLuoOrder, &Params::t(t)).unwrap();
            checked += 1;
            if r.status != Status::Ok || !is_exact(&r.sum) || r.equality != oracle_disjoint_cliques(g, t, false) {
                failures.push(format!("order {} t = {t}", r.graph6));
            }
        }
    }
    for g in sized {
        for t in 3..=4 {
            let r = verify(g, TheoremId::LocalLuoSize, &Params::t(t)).unwrap();
            checked += 1;
            if r.status != Status::Ok || !is_exact(&r.sum) || r.equality != oracle_disjoint_cliques(g, t, true) {
                failures.push(format!("size {} t = {t}", r.graph6));
            }
        }
    }
    Outcome::new(&failures, format!("{checked} reports over {} + {} graphs", graphs.len(), sized.len()))
}

fn criterion_3(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in ["K2", "K3", "K4", "S2", "S3", "paw", "diamond"] {
        let h = pat(name);
        // admissible: u <= dom(H) and u <= t - 1
        for u in (1..=2).filter(|&u| u <= h.dom_count() && u < h.order()) {
            for g in graphs.iter().filter(|g| g.n() <= 6) {
                let r = verify(g, TheoremId::LocalStar, &Params::star(h.clone(), u)).unwrap();
                checked += 1;
                let expected = oracle_star_equality(g, h.graph(), u);
                if r.status != Status::Ok || r.equality != expected || r.characterization != Some(expected) {
                    failures.push(format!("{name} u = {u} on {}", r.graph6));
                }
            }
        }
    }
    Outcome::new(&failures, format!("{checked} reports"))
}

fn criterion_4(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let mut applicable = 0;
    let families = [
        (TheoremId::Zykov, 2),
        (TheoremId::Luo, 2),
        (TheoremId::CcMex, 3),
        (TheoremId::WoodN, 2),
        (TheoremId::WoodM, 3),
    ];
    for g in graphs {
        for (theorem, t_min) in families {
            for r in 2..=7 {
                for t in t_min..=r {
                    let params = Params::t(t).with_r(r);
                    let report = verify_derived(g, theorem, &params).unwrap();
                    if report.status == Status::NotApplicable {
                        continue;
                    }
                    applicable += 1;
                    let chain = derivation_chain(g, theorem, &params).unwrap();
                    if report.status != Status::Ok || chain.is_some_and(|c| !c.holds()) {
                        failures.push(format!("{theorem} t = {t} r = {r} on {}", report.graph6));
                    }
                }
            }
        }
    }
    let q = |mode, budget, h: &str, f: &str| TuranQuery { mode, budget, target: pat(h), forbidden: pat(f) };
    let checks = [
        // P4-free: longest path at most 2 edges, r = 3
        (q(TuranMode::Ex, 6, "K3", "P4"), ExactRational::from(6u64) / ExactRational::from(3u64) * binom_q(3, 3)),
        (q(TuranMode::Mex, 6, "K3", "P4"), ExactRational::from(6u64) / binom_q(3, 2) * binom_q(3, 3)),
        // K3-free, r = 2
        (q(TuranMode::Ex, 4, "K2", "K3"), binom_q(2, 2) * (ExactRational::from(4u64) / ExactRational::from(2u64)).pow(2)),
    ];
    let mut values = Vec::new();
    for (query, predicted) in checks {
        let res = turan_number(&query).unwrap();
        values.push(format!("{query} = {}", res.value));
        if ExactRational::from(res.value) != predicted {
            failures.push(format!("{query} = {} but bound gives {predicted}", res.value));
        }
        for g in &res.extremal {
            if count_copies(g, &query.forbidden) != 0 {
                failures.push(format!("{query} extremal graph is not free"));
            }
        }
    }
    Outcome::new(&failures, format!("{applicable} applicable reports; {}", values.join(", ")))
}

fn criterion_5(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let fano = verify_local_kr22(&UniformHypergraph::fano(), 3, 2).unwrap();
    if !(fano.equality && (fano.sum.to_f64() - 7.0).abs() < 1e-9 && (fano.bound.to_f64() - 7.0).abs() < 1e-9) {
        failures.push(format!("Fano sum {} bound {}", fano.sum, fano.bound));
    }
    let mut hyper = 0;
    for n in 3..=6 {
        for h in enumerate_uniform_hypergraphs(n, 3).unwrap() {
            hyper += 1;
            for t in 3..=4 {
                for i in 1..=2 {
                    match verify_local_kr22(&h, t, i) {
                        Ok(r) if r.status == Status::Ok => {}
                        Ok(r) => failures.push(format!("{h} t = {t} i = {i}: sum {} bound {}", r.sum, r.bound)),
                        Err(e) => failures.push(format!("{h} t = {t} i = {i}: {e}")),
                    }
                }
            }
        }
    }
    for g in graphs {
        for t in 2..=5 {
            if !kr22_matches_lovasz(g, t).unwrap() {
                failures.push(format!("bounded-degree vs edge bound on {:?} t = {t}", g.edges()));
            }
        }
    }
    Outcome::new(&failures, format!("Fano sum {}; {hyper} hypergraphs; {} graphs", fano.sum, graphs.len()))
}

fn describe(outcome: &SearchOutcome) -> String {
    format!(
        "{} checked, {} violations, {} tight",
        outcome.checked,
        outcome.violations.len(),
        outcome.tight.len()
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    let searches = [
        (ConjectureId::Frohmader, SearchCaps::graphs(6, 2, 6).with_sizes(12)),
        (ConjectureId::CycleOrder, SearchCaps::graphs(6, 2, 6)),
        (ConjectureId::CycleSize, SearchCaps::graphs(6, 2, 6)),
        (ConjectureId::HypergraphM, SearchCaps::hypergraphs(5, 3)),
    ];
    for (c, caps) in searches {
        let outcome = search_conjecture(c, &caps).unwrap();
        for v in &outcome.violations {
            failures.push(format!("{c} counterexample {} t = {} sum {} bound {}", v.key, v.t, v.sum, v.bound));
        }
        for n in &outcome.notes {
            if c == ConjectureId::HypergraphM {
                failures.push(format!("{c}: {n}"));
            }
        }
        let bad = outcome.tight_without_characterization();
        let mut ts: Vec<usize> = bad.iter().map(|f| f.t).collect();
        ts.dedup();
        for f in bad.iter().take(1) {
            failures.push(format!(
                "{c}: {} tight cases outside the conjectured equality case (t in {ts:?}), e.g. {} t = {}",
                bad.len(),
                f.key,
                f.t
            ));
        }
        parts.push(format!("{c}: {}", describe(&outcome)));
    }
    Outcome::new(&failures, parts.join("; "))
}

fn criterion_7(graphs: &[Graph]) -> Outcome {
    let mut failures = Vec::new();
    let small: Vec<&Graph> = graphs.iter().filter(|g| g.n() <= 6).collect();
    for g in &small {
        let paths = path_table(g);
        let cycles = cycle_table(g);
        for t in 1..=g.n() {
            for c in oracle_cliques(g, t) {
                if Some(beta(g, c).unwrap()) != oracle_beta(&paths, c) || gamma(g, c).unwrap() != oracle_gamma(&cycles, c) {
                    failures.push(format!("size functions on {:?} at {c}", g.edges()));
                }
            }
        }
    }
    let patterns: Vec<PatternGraph> = (1..=4)
        .flat_map(|t| enumerate_graphs(t).unwrap())
        .enumerate()
        .map(|(k, h)| PatternGraph::new(format!("H{k}"), h).unwrap())
        .collect();
    for g in &small {
        for h in &patterns {
            if count_copies(g, h) != naive_copy_count(g, h.graph()) {
                failures.push(format!("copies of {:?} in {:?}", h.graph().edges(), g.edges()));
            }
        }
    }
    let mut counts = Vec::new();
    for n in 3..=7 {
        let found = enumerate_graphs(n).unwrap().len();
        let oracle = if n <= 6 { labeled_dedup_count(n) as u128 } else { burnside_count(n) };
        counts.push(found);
        if found as u128 != oracle {
            failures.push(format!("n = {n}: {found} classes, oracle {oracle}"));
        }
    }
    Outcome::new(
        &failures,
        format!("{} graphs, {} patterns, class counts {counts:?}", small.len(), patterns.len()),
    )
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut paw_k5 = 0;
    for name in ["paw", "K3", "S2", "diamond"] {
        let h = pat(name);
        let t = h.order();
        let automorphisms = injective_homomorphisms(h.graph(), h.graph());
        for r in [4, 5] {
            for k in 1..=3 {
                let g = Graph::complete(r).unwrap().repeat(k).unwrap();
                let direct = naive_copy_count(&g, h.graph());
                let per_clique = binom_q(r as u64, t as u64) * ExactRational::from((1..=t).product::<usize>())
                    / ExactRational::from(automorphisms);
                if ExactRational::from(direct) != ExactRational::from(k) * per_clique {
                    failures.push(format!("{name} in {k}K{r}: direct {direct}"));
                }
                if name == "paw" && r == 5 && k == 1 {
                    paw_k5 = direct;
                }
                let modes = if h.dom_count() >= 2 { vec![Budget::Vertices, Budget::Edges] } else { vec![Budget::Vertices] };
                for mode in modes {
                    let block = if mode == Budget::Vertices { r } else { r * (r - 1) / 2 };
                    let check = check_asymptotic_construction(&h, r, k * block, mode).unwrap();
                    if check.direct != direct || !check.agrees() || !check.sandwiches(direct) {
                        failures.push(format!("{name} r = {r} k = {k} {mode:?}: closed form {}", check.closed_form));
                    }
                }
            }
        }
    }
    if paw_k5 != 60 {
        failures.push(format!("paw in K5: {paw_k5}"));
    }
    Outcome::new(&failures, format!("paw in K5 = {paw_k5}"))
}

fn main() {
    let graphs = graphs_up_to(7);
    let sized: Vec<Graph> = (0..=12).flat_map(|m| enumerate_graphs_by_edges(m, 64).unwrap()).collect();
    let criteria: Vec<Criterion> = vec![
        ("1 local clique bound", Box::new(|| criterion_1(&graphs))),
        ("2 local path bounds", Box::new(|| criterion_2(&graphs, &sized))),
        ("3 local star bound", Box::new(|| criterion_3(&graphs))),
        ("4 derived bounds", Box::new(|| criterion_4(&graphs))),
        ("5 hypergraph bounds", Box::new(|| criterion_5(&graphs))),
        ("6 conjecture searches", Box::new(criterion_6)),
        ("7 oracle equivalence", Box::new(|| criterion_7(&graphs))),
        ("8 disjoint clique construction", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {verdict} ({}) [{:.2}s]", outcome.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
