//! `locweight`: verify localized clique inequalities, compute small
//! generalized Turán numbers and search for counterexamples.

mod io;
mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use locweight_core::generate::{enumerate_graphs, enumerate_graphs_by_edges};
use locweight_core::hypergraph::{enumerate_uniform_hypergraphs, verify_kr22, verify_local_kr22, UniformHypergraph};
use locweight_core::pattern::PatternGraph;
use locweight_core::turan::{
    evaluate_graph, graph_search_space, note_conventions, search_hypergraph, turan_number, ConjectureId, SearchCaps,
    SearchOutcome, TuranMode, TuranQuery,
};
use locweight_core::verify::{verify, Params, Status, TheoremId, VerificationReport};
use locweight_core::{ExactRational, Graph};
use rayon::prelude::*;

use io::InputFormat;
use output::Format;

#[derive(Parser)]
#[command(name = "locweight", version, about = "Localized weight inequalities for generalized Turán problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a theorem on given graphs or on every graph of a size.
    Verify(VerifyArgs),
    /// Compute ex(n, H, F) or mex(m, H, F) exhaustively.
    Turan(TuranArgs),
    /// Search a conjectured inequality for counterexamples.
    Search(SearchArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    /// Real size parameter for the bounded-degree hypergraph bound, e.g. `9/2`.
    #[arg(long)]
    x: Option<String>,
    /// Catalog name (K3, P4, S2, C5, paw, diamond, ...) or an edge-list file.
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long, conflicts_with_all = ["sweep_n", "sweep_m"])]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Every graph (or hypergraph) on exactly N vertices.
    #[arg(long)]
    sweep_n: Option<usize>,
    /// Every graph with exactly M edges and no isolated vertices.
    #[arg(long, conflicts_with = "sweep_n")]
    sweep_m: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TuranArgs {
    #[arg(long, default_value = "ex")]
    mode: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    target: String,
    #[arg(long)]
    forbid: String,
    /// Include the running time in the result.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    conjecture: String,
    /// Largest order searched.
    #[arg(long, alias = "n-max")]
    sweep_n: Option<usize>,
    /// Also search graphs with up to M edges and no isolated vertices.
    #[arg(long)]
    m_max: Option<usize>,
    /// A single clique order.
    #[arg(long, conflicts_with = "t_max")]
    t: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long, default_value_t = 3)]
    q: usize,
    #[command(flatten)]
    common: Common,
}

fn pattern(spec: &str) -> Result<PatternGraph> {
    let path = Path::new(spec);
    if path.is_file() {
        let g = io::parse_edge_list(&io::read(path)?)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
        return Ok(PatternGraph::new(name, g)?);
    }
    Ok(PatternGraph::from_name(spec)?)
}

fn rational(text: &str) -> Result<ExactRational> {
    let parse = |s: &str| s.trim().parse::<i64>().with_context(|| format!("`{text}` is not a rational number"));
    Ok(match text.split_once('/') {
        Some((a, b)) => {
            let d = parse(b)?;
            if d == 0 {
                bail!("zero denominator in `{text}`");
            }
            ExactRational::new(parse(a)?, d)
        }
        None => ExactRational::from_integer(parse(text)?),
    })
}

fn setup(common: &Common) -> Result<Box<dyn Write>> {
    if let Some(k) = common.threads {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("cannot size the thread pool")?;
    }
    Ok(match &common.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn graph_params(a: &VerifyArgs) -> Result<Params> {
    let mut p = match &a.pattern {
        Some(spec) => Params::star(pattern(spec)?, a.u.unwrap_or(1)),
        None => Params::default(),
    };
    p.t = a.t.or(p.t);
    p.u = a.u.or(p.u);
    p.r = a.r;
    p.q = a.q;
    p.i = a.i;
    Ok(p)
}

fn dump_witness(r: &VerificationReport) {
    let witness = r.witness.as_ref().map_or_else(String::new, |w| format!(" witness {w:?}"));
    let what = if r.status == Status::Violation { "VIOLATION" } else { "DISAGREEMENT" };
    eprintln!("{what} {} {} sum {} bound {}{witness}", r.theorem, r.graph6, r.sum, r.bound);
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode> {
    let theorem = TheoremId::from_name(&a.theorem)?;
    let mut out = setup(&a.common)?;
    let reports = if theorem.is_hypergraph() {
        verify_hypergraphs(&a, theorem)?
    } else {
        let params = graph_params(&a)?;
        let (graphs, sorted) = match (&a.input, a.sweep_n, a.sweep_m) {
            (Some(path), _, _) => {
                let format = a.input_format.unwrap_or_else(|| InputFormat::from_path(path));
                (io::read_graphs(path, format)?, false)
            }
            (None, Some(n), _) => (enumerate_graphs(n)?, true),
            (None, None, Some(m)) => (enumerate_graphs_by_edges(m, locweight_core::MAX_VERTICES)?, true),
            (None, None, None) => bail!("give --input, --sweep-n or --sweep-m"),
        };
        // fail on bad parameters before the sweep
        if let Some(g) = graphs.first() {
            verify(g, theorem, &params)?;
        }
        let mut reports: Vec<VerificationReport> =
            graphs.par_iter().map(|g| verify(g, theorem, &params)).collect::<Result<_, _>>()?;
        if sorted {
            reports.sort_by(|x, y| x.graph6.cmp(&y.graph6));
        }
        reports
    };
    output::write_reports(&mut out, &reports, a.common.format)?;
    out.flush()?;
    let dirty: Vec<&VerificationReport> = reports.iter().filter(|r| !r.is_clean()).collect();
    for r in &dirty {
        dump_witness(r);
    }
    Ok(if dirty.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify_hypergraphs(a: &VerifyArgs, theorem: TheoremId) -> Result<Vec<VerificationReport>> {
    let hypergraphs: Vec<UniformHypergraph> = match (&a.input, a.sweep_n) {
        (Some(path), _) => vec![io::parse_hypergraph(&io::read(path)?)?],
        (None, Some(n)) => enumerate_uniform_hypergraphs(n, a.q.unwrap_or(3))?,
        (None, None) => bail!("give --input or --sweep-n"),
    };
    let t = a.t.context("--t is required")?;
    let i = a.i.context("--i is required")?;
    let x = a.x.as_deref().map(rational).transpose()?;
    if let (Some(q), Some(h)) = (a.q, hypergraphs.first()) {
        if h.q() != q {
            bail!("input is {}-uniform but --q {q} was given", h.q());
        }
    }
    let check = |h: &UniformHypergraph| -> Result<VerificationReport> {
        Ok(match theorem {
            TheoremId::Kr22 => verify_kr22(h, t, i, x.as_ref().context("--x is required")?)?,
            _ => verify_local_kr22(h, t, i)?,
        })
    };
    if let Some(h) = hypergraphs.first() {
        check(h)?;
    }
    hypergraphs.par_iter().map(check).collect()
}

fn run_turan(a: TuranArgs) -> Result<ExitCode> {
    let mode = TuranMode::from_name(&a.mode)?;
    let budget = match (mode, a.n, a.m) {
        (TuranMode::Ex, Some(n), None) => n,
        (TuranMode::Mex, None, Some(m)) => m,
        (TuranMode::Ex, ..) => bail!("ex mode needs --n (and no --m)"),
        (TuranMode::Mex, ..) => bail!("mex mode needs --m (and no --n)"),
    };
    let query = TuranQuery { mode, budget, target: pattern(&a.target)?, forbidden: pattern(&a.forbid)? };
    let mut out = setup(&a.common)?;
    let start = Instant::now();
    let result = turan_number(&query)?;
    let ms = a.timing.then(|| start.elapsed().as_millis());
    output::write_turan(&mut out, &query, &result, a.common.format, ms)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run_search(a: SearchArgs) -> Result<ExitCode> {
    let c = ConjectureId::from_name(&a.conjecture)?;
    let mut out = setup(&a.common)?;
    let hyper = c == ConjectureId::HypergraphM;
    let n_max = a.sweep_n.unwrap_or(if hyper { 5 } else { 6 });
    let t_min = a.t.unwrap_or(if hyper { a.q } else { 2 });
    let t_max = a.t.or(a.t_max).unwrap_or(n_max);
    let mut caps = SearchCaps { n_max, m_max: a.m_max, t_min, t_max, q: a.q };
    if hyper && a.m_max.is_some() {
        bail!("--m-max applies to graph conjectures");
    }
    let mut outcome = SearchOutcome::default();
    if hyper {
        caps.t_max = caps.t_max.max(caps.q);
        for n in caps.q..=n_max {
            let hs = enumerate_uniform_hypergraphs(n, caps.q)?;
            let parts: Vec<SearchOutcome> = hs
                .par_iter()
                .map(|h| {
                    let mut o = SearchOutcome::default();
                    search_hypergraph(h, &caps, &mut o);
                    o
                })
                .collect();
            parts.into_iter().for_each(|p| outcome.merge(p));
        }
    } else {
        let graphs = graph_search_space(&caps)?;
        let parts: Vec<SearchOutcome> = graphs
            .par_iter()
            .map(|g: &Graph| {
                let mut o = SearchOutcome::default();
                for t in t_min.max(2)..=t_max {
                    o.absorb(evaluate_graph(c, g, t)?);
                }
                Ok(o)
            })
            .collect::<Result<_, locweight_core::Error>>()?;
        parts.into_iter().for_each(|p| outcome.merge(p));
        note_conventions(c, &mut outcome);
    }
    outcome.normalize();
    output::write_search(&mut out, c.name(), &outcome, a.common.format)?;
    out.flush()?;
    for v in &outcome.violations {
        eprintln!("VIOLATION {c} {} t={} sum {} bound {}", v.key, v.t, v.sum, v.bound);
    }
    Ok(if outcome.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Turan(a) => run_turan(a),
        Command::Search(a) => run_search(a),
    };
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
