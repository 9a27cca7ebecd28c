use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::search::{bit, canonical, max_independent, min_vertex_cover, ones, Bits};

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    g.edges().into_iter().all(|(u, v)| s.contains(u) || s.contains(v))
}

/// Pairwise disjoint closed neighborhoods.
pub fn is_two_packing(g: &Graph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..].iter().all(|&v| {
            let (nu, nv) = (g.closed_neighborhood(u).unwrap(), g.closed_neighborhood(v).unwrap());
            !nu.intersects(&nv)
        })
    })
}

fn max_independent_canonical(adj: &[u64]) -> (usize, u64) {
    let n = adj.len();
    let k = ones(max_independent(adj, 0, 0, 0).expect("the empty set is independent"));
    (k, canonical(n, |i, o| max_independent(adj, i, o, k).is_some()))
}

/// α(G) with the integer-smallest maximum independent set.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = g.masks()?;
    let (k, set) = max_independent_canonical(&adj);
    Ok((k, VertexSet::from_mask(g.order(), set)))
}

/// β(G) by its own branch-and-bound (not via α), with the integer-smallest cover.
pub fn vertex_cover_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = g.masks()?;
    let n = g.order();
    let k = ones(min_vertex_cover(&adj, 0, 0, n).expect("V(G) covers"));
    let set = canonical(n, |i, o| min_vertex_cover(&adj, i, o, k).is_some());
    Ok((k, VertexSet::from_mask(n, set)))
}

/// ρ(G) as a maximum independent set of the distance-at-most-two conflict graph.
pub fn two_packing_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = g.masks()?;
    let n = g.order();
    let conflict: Vec<u64> = (0..n)
        .map(|u| {
            let closed = adj[u] | bit(u);
            Bits(closed).fold(0u64, |acc, v| acc | adj[v] | bit(v)) & !bit(u)
        })
        .collect();
    let (k, set) = max_independent_canonical(&conflict);
    Ok((k, VertexSet::from_mask(n, set)))
}
