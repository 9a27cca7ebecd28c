//! Text formats: graph6, `n m` edge lists, and JSON graph objects.

use serde::Deserialize;

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const LONG: u8 = 126;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// graph6 string for `g` (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8) -> Result<u8> {
    if (BIAS..=BIAS + 63).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(parse_err(format!("byte {b} is outside the graph6 range 63..=126")))
    }
}

/// Decodes one graph6 string. Padding bits must be zero, so that a
/// successful decode always re-encodes to the same bytes.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    let (n, rest) = if bytes[0] != LONG {
        (sextet(bytes[0])? as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == LONG {
        if bytes.len() < 8 {
            return Err(parse_err("truncated 8-byte graph6 order"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | sextet(b)? as usize;
        }
        if n <= 258_047 {
            return Err(parse_err("non-canonical graph6 order encoding"));
        }
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(parse_err("truncated 4-byte graph6 order"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | sextet(b)? as usize;
        }
        if n <= 62 {
            return Err(parse_err("non-canonical graph6 order encoding"));
        }
        (n, &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, expected {expected} for n={n}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(rest[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(*rest.last().unwrap())?;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(parse_err("nonzero graph6 padding bits"));
        }
    }
    for &b in rest {
        sextet(b)?;
    }
    Graph::new(n, edges)
}

/// Parses a graph6 file: one graph per non-empty line, optional `>>graph6<<`
/// header. Errors carry the 1-based line number.
pub fn parse_graph6_corpus(text: &str) -> Vec<std::result::Result<Graph, (usize, Error)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let line = line.trim().trim_start_matches(">>graph6<<");
            from_graph6(line).map_err(|e| (i + 1, e))
        })
        .collect()
}

/// Edge-list text: first line `n m`, then `m` lines `u v` (0-based).
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or_else(|| parse_err("missing `n m` header"))?;
    let nums = parse_pair(ln, header)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines.by_ref().take(m) {
        edges.push(parse_pair(ln, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(format!("header promises {m} edges, found {}", edges.len())));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(format!("line {ln}: more edge lines than the header's m={m}")));
    }
    Graph::new(n, edges)
}

fn parse_pair(ln: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| parse_err(format!("line {ln}: expected two integers")))?
            .parse()
            .map_err(|e| parse_err(format!("line {ln}: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(format!("line {ln}: trailing tokens")));
    }
    Ok((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"n": int, "edges": [[u, v], ...]}`
pub fn from_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}
