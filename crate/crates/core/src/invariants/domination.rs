use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::search::{all_mask, bit, canonical, min_dominating, ones, Bits};
use crate::superdom::k_subsets;
use crate::SolverConfig;

/// Every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    let outside = s.complement();
    outside.iter().all(|u| g.neighbors(u).intersects(s))
}

/// γ(G) with the integer-smallest minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = g.masks()?;
    let n = g.order();
    let best = min_dominating(&adj, 0, 0, n).expect("V(G) dominates");
    let k = ones(best);
    let set = canonical(n, |i, o| min_dominating(&adj, i, o, k).is_some());
    Ok((k, VertexSet::from_mask(n, set)))
}

fn dominates(closed: &[u64], s: u64, all: u64) -> bool {
    Bits(s).fold(0u64, |acc, v| acc | closed[v]) == all
}

/// `s` dominates and every outside `v` has a neighbor `u ∈ s` such that
/// `(s \ {u}) ∪ {v}` still dominates.
pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> bool {
    if !is_dominating(g, s) {
        return false;
    }
    s.complement().iter().all(|v| {
        g.neighbors(v).iter().filter(|&u| s.contains(u)).any(|u| {
            let mut swapped = s.clone();
            swapped.remove(u);
            swapped.insert(v);
            is_dominating(g, &swapped)
        })
    })
}

/// γ_s(G) by ascending-cardinality subset enumeration; the first secure
/// dominating set met is the integer-smallest of minimum size.
pub fn secure_domination_number(g: &Graph, config: &SolverConfig) -> Result<(usize, VertexSet)> {
    crate::superdom::check_cap(g, "secure domination", config.secure_cap)?;
    let adj = g.masks()?;
    let n = g.order();
    let all = all_mask(n);
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | bit(v)).collect();
    for k in 0..=n {
        for s in k_subsets(n, k) {
            if !dominates(&closed, s, all) {
                continue;
            }
            let secure = Bits(all & !s).all(|v| {
                Bits(adj[v] & s).any(|u| dominates(&closed, (s & !bit(u)) | bit(v), all))
            });
            if secure {
                return Ok((k, VertexSet::from_mask(n, s)));
            }
        }
    }
    unreachable!("V(G) is secure dominating")
}
