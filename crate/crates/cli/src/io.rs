//! Input formats: graph6 lines, plain edge lists and hypergraph text.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use locweight_core::hypergraph::UniformHypergraph;
use locweight_core::{graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edges,
    Hypergraph,
}

impl InputFormat {
    /// Guesses from the extension: `.g6` graph6, `.hg` hypergraph, otherwise edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => InputFormat::Graph6,
            Some("hg") => InputFormat::Hypergraph,
            _ => InputFormat::Edges,
        }
    }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| tok.parse().with_context(|| format!("line {lineno}: `{tok}` is not a vertex id or count")))
        .collect()
}

/// Non-empty lines that are not `#` comments, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// One graph per line; an optional `>>graph6<<` header is skipped.
pub fn parse_graph6(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(lineno, line)| {
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            graph6::decode(line).with_context(|| format!("line {lineno}"))
        })
        .collect()
}

/// First line `n m`, then `m` lines `u v` with 0-indexed vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().context("empty edge list")?;
    let head = numbers(header, lineno)?;
    let [n, m] = head[..] else {
        bail!("line {lineno}: expected `n m`");
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        match numbers(line, lineno)?[..] {
            [u, v] => edges.push((u, v)),
            _ => bail!("line {lineno}: expected `u v`"),
        }
    }
    if edges.len() != m {
        bail!("header announces {m} edges but {} were given", edges.len());
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// First line `n q m`, then `m` lines of `q` vertex ids.
pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().context("empty hypergraph file")?;
    let head = numbers(header, lineno)?;
    let [n, q, m] = head[..] else {
        bail!("line {lineno}: expected `n q m`");
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let e = numbers(line, lineno)?;
        if e.len() != q {
            bail!("line {lineno}: expected {q} vertex ids");
        }
        edges.push(e);
    }
    if edges.len() != m {
        bail!("header announces {m} edges but {} were given", edges.len());
    }
    Ok(UniformHypergraph::new(n, q, &edges)?)
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_graphs(path: &Path, format: InputFormat) -> Result<Vec<Graph>> {
    let text = read(path)?;
    match format {
        InputFormat::Graph6 => parse_graph6(&text),
        InputFormat::Edges => Ok(vec![parse_edge_list(&text)?]),
        InputFormat::Hypergraph => bail!("{} holds a hypergraph, not a graph", path.display()),
    }
}
