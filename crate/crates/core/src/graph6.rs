//! graph6 encoding: size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn push_header(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// Encodes an `n`-vertex graph given by a predicate on unordered pairs.
pub fn encode_with(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> String {
    let mut out = String::new();
    push_header(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

pub fn encode(g: &Graph) -> String {
    encode_with(g.n(), |i, j| g.has_edge(i, j))
}

fn sextet(b: u8) -> Result<u8> {
    if (BIAS..=126).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(Error::Graph6(format!("byte {b:#x} outside the printable range 63..=126")))
    }
}

/// Decodes the vertex count and edge list (`u < v`) of a graph6 string.
pub fn decode_edges(s: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, body) = if bytes[0] != b'~' {
        (sextet(bytes[0])? as usize, &bytes[1..])
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 18-bit size header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 36-bit size header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)? as usize;
        }
        (n, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} body bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let bit = (sextet(body[k / 6])? >> (5 - k % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if pairs % 6 != 0 {
        let last = sextet(body[body.len() - 1])?;
        if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    edges.sort_unstable();
    Ok((n, edges))
}

pub fn decode(s: &str) -> Result<Graph> {
    let (n, edges) = decode_edges(s)?;
    Graph::from_edges(n, &edges)
}
