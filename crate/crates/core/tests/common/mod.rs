//! Literal brute-force oracles and shared fixtures for the integration tests.
//!
//! Every oracle enumerates subsets straight from the definition and uses only
//! the edge list of the graph, so it shares no code with the solvers.
#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use superdom::graph::io::from_edge_list;
use superdom::Graph;

/// Adjacency masks rebuilt from the edge list.
pub fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..=full(n)
}

fn submasks(set: u64) -> impl Iterator<Item = u64> {
    // every submask of `set`, including 0
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & set);
        Some(cur)
    })
}

fn pop(m: u64) -> usize {
    m.count_ones() as usize
}

pub fn is_super_dominating(adj: &[u64], d: u64) -> bool {
    let outside = full(adj.len()) & !d;
    members(outside).all(|u| members(d).any(|v| adj[v] & outside == 1 << u))
}

fn minimum_where(n: usize, pred: impl Fn(u64) -> bool) -> usize {
    subsets(n).filter(|&m| pred(m)).map(pop).min().expect("some subset qualifies")
}

fn maximum_where(n: usize, pred: impl Fn(u64) -> bool) -> usize {
    subsets(n).filter(|&m| pred(m)).map(pop).max().expect("some subset qualifies")
}

pub fn gamma_sp(g: &Graph) -> usize {
    let adj = adjacency(g);
    minimum_where(g.order(), |d| is_super_dominating(&adj, d))
}

/// Minimum super dominating sets as masks, ascending.
pub fn min_superdom_sets(g: &Graph) -> Vec<u64> {
    let adj = adjacency(g);
    let k = gamma_sp(g);
    subsets(g.order())
        .filter(|&m| pop(m) == k && is_super_dominating(&adj, m))
        .collect()
}

/// P(S): subsets S* ⊆ S with |S*| = |S̄| such that every outside vertex has a
/// member of S* whose only outside neighbour it is.
pub fn pstar(g: &Graph, s: u64) -> Vec<u64> {
    let adj = adjacency(g);
    let outside = full(g.order()) & !s;
    let mut out: Vec<u64> = submasks(s)
        .filter(|&t| pop(t) == pop(outside))
        .filter(|&t| members(outside).all(|u| members(t).any(|w| adj[w] & outside == 1 << u)))
        .collect();
    out.sort_unstable();
    out
}

/// λ(G) by enumerating every X ⊆ S for every S ∈ S(G), S* ∈ P(S).
pub fn lambda(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.order();
    let mut best = 0;
    for s in min_superdom_sets(g) {
        let outside = full(n) & !s;
        for t in pstar(g, s) {
            let blocked = outside | t;
            for x in submasks(s) {
                let nx = members(x).fold(0, |acc, v| acc | adj[v]);
                if nx & blocked == 0 {
                    best = best.max(pop(x));
                }
            }
        }
    }
    best
}

fn dominates(adj: &[u64], d: u64) -> bool {
    let covered = members(d).fold(d, |acc, v| acc | adj[v]);
    covered == full(adj.len())
}

pub fn domination(g: &Graph) -> usize {
    let adj = adjacency(g);
    minimum_where(g.order(), |d| dominates(&adj, d))
}

pub fn secure_domination(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.order();
    minimum_where(n, |d| {
        dominates(&adj, d)
            && members(full(n) & !d).all(|u| {
                members(adj[u] & d).any(|v| dominates(&adj, (d & !(1 << v)) | 1 << u))
            })
    })
}

pub fn independence(g: &Graph) -> usize {
    let adj = adjacency(g);
    maximum_where(g.order(), |s| members(s).all(|v| adj[v] & s == 0))
}

pub fn vertex_cover(g: &Graph) -> usize {
    let edges = g.edges();
    minimum_where(g.order(), |c| edges.iter().all(|&(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1))
}

pub fn two_packing(g: &Graph) -> usize {
    let adj = adjacency(g);
    maximum_where(g.order(), |s| {
        let vs: Vec<usize> = members(s).collect();
        vs.iter().enumerate().all(|(i, &a)| {
            vs[i + 1..]
                .iter()
                .all(|&b| (adj[a] | 1 << a) & (adj[b] | 1 << b) == 0)
        })
    })
}

/// Maximum matching size: the lowest unmatched vertex either stays
/// unmatched or pairs with each free neighbour in turn.
pub fn matching(g: &Graph) -> usize {
    fn go(adj: &[u64], free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(adj, rest);
        for u in members(adj[v] & rest) {
            best = best.max(1 + go(adj, rest & !(1 << u)));
        }
        best
    }
    let adj = adjacency(g);
    go(&adj, full(g.order()))
}

pub fn fixture(name: &str) -> Graph {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    let text = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    from_edge_list(&text).expect("fixture parses")
}

/// Nine vertices, five twin classes, γ_sp = n − t + 1.
pub fn twin_classes() -> Graph {
    fixture("twin_classes.edges")
}

/// K1 joined with K2 ∪ K2 ∪ K1 ∪ K1; λ = 2.
pub fn lambda_two() -> Graph {
    fixture("lambda_two.edges")
}

/// K1 joined with K2 ∪ K1; λ = 1.
pub fn lambda_one() -> Graph {
    fixture("lambda_one.edges")
}

/// Seven vertices with γ_sp = n − γ = n − ρ = ⌊nΔ/(Δ+1)⌋ = 5.
pub fn degree_tight() -> Graph {
    fixture("degree_tight.edges")
}

pub fn all_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("twin_classes", twin_classes()),
        ("lambda_two", lambda_two()),
        ("lambda_one", lambda_one()),
        ("degree_tight", degree_tight()),
    ]
}

/// Graphs with `n` in the range, each pair present independently.
pub fn arb_graph(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    n.prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    })
}
