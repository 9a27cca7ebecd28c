//! Standard families with fixed labelings.
//!
//! * path: `0-1-...-(n-1)`
//! * cycle: path plus `(n-1)-0`
//! * star `K_{1,r}`: center `0`, leaves `1..=r`
//! * complete multipartite: parts are consecutive blocks in the given order
//! * hypercube `Q_k`: vertex index is the coordinate bitmask

use super::Graph;
use crate::error::{Error, Result};

fn at_least(family: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::ParameterBelowMinimum { family, value, min })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The edgeless graph `N_n`.
pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty", n, 1)?;
    Ok(Graph::edgeless(n))
}

pub fn star(r: usize) -> Result<Graph> {
    at_least("star", r, 1)?;
    Graph::new(r + 1, (1..=r).map(|i| (0, i)))
}

pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph> {
    at_least("complete_bipartite", r.min(t), 1)?;
    complete_multipartite(&[r, t])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    at_least("complete_multipartite", parts.len(), 1)?;
    for &p in parts {
        at_least("complete_multipartite part", p, 1)?;
    }
    let mut block = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, p));
    }
    let n = block.len();
    let block = &block;
    Graph::new(
        n,
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| block[u] != block[v]).map(move |v| (u, v))),
    )
}

pub fn hypercube(k: usize) -> Result<Graph> {
    at_least("hypercube", k, 1)?;
    if k >= usize::BITS as usize - 1 {
        return Err(Error::TooLarge {
            what: "hypercube dimension",
            n: k,
            cap: usize::BITS as usize - 2,
        });
    }
    let n = 1usize << k;
    Graph::new(
        n,
        (0..n).flat_map(move |u| (0..k).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
}
