use super::Graph;
use crate::error::{Error, Result};

/// `G ∪ H`; vertex `h` of `H` becomes `|V(G)| + h`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let edges = g
        .edges()
        .into_iter()
        .chain(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    Graph::new(off + h.order(), edges).expect("union of valid graphs")
}

/// `G + H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let cross = (0..off).flat_map(|u| (0..h.order()).map(move |v| (u, off + v)));
    let edges = g
        .edges()
        .into_iter()
        .chain(h.edges().into_iter().map(|(u, v)| (u + off, v + off)))
        .chain(cross);
    Graph::new(off + h.order(), edges).expect("join of valid graphs")
}

/// Index of the pair `(g, h)` in `G □ H` where `H` has order `h_order`.
#[inline]
pub fn product_vertex(g: usize, h: usize, h_order: usize) -> usize {
    g * h_order + h
}

/// Cartesian product `G □ H` with `(g, h)` encoded as `g·|V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.order(), h.order());
    let mut edges = Vec::with_capacity(n * h.size() + m * g.size());
    for a in 0..n {
        for (x, y) in h.edges() {
            edges.push((product_vertex(a, x, m), product_vertex(a, y, m)));
        }
    }
    for (a, b) in g.edges() {
        for x in 0..m {
            edges.push((product_vertex(a, x, m), product_vertex(b, x, m)));
        }
    }
    Graph::new(n * m, edges).expect("product of valid graphs")
}

/// Corona `G ⊙ H`. Vertices `0..n` are `G`; copy `i` of `H` occupies
/// `n + i·|V(H)| .. n + (i+1)·|V(H)|` and is joined to vertex `i`.
pub fn corona_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    if n == 0 {
        return Err(Error::ParameterBelowMinimum {
            family: "corona (order of first factor)",
            value: 0,
            min: 1,
        });
    }
    let m = h.order();
    let mut edges = g.edges();
    let h_edges = h.edges();
    for i in 0..n {
        let base = n + i * m;
        edges.extend(h_edges.iter().map(|&(x, y)| (base + x, base + y)));
        edges.extend((0..m).map(|x| (i, base + x)));
    }
    Graph::new(n * (1 + m), edges)
}

/// `L(G)` together with the edge of `G` behind each of its vertices.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the edge of `G` represented by vertex `i`, in
    /// lexicographic order of endpoints.
    pub edges: Vec<(usize, usize)>,
}

pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    if g.is_empty() {
        return Err(Error::NoEdges);
    }
    let edges = g.edges();
    // incidence lists keep this proportional to sum of deg^2
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut ledges = Vec::new();
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            ledges.extend(inc[a + 1..].iter().map(|&j| (i, j)));
        }
    }
    let graph = Graph::new(edges.len(), ledges)?;
    Ok(LineGraph { graph, edges })
}
