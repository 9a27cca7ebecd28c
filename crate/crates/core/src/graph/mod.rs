//! Simple undirected graphs over `0..n`, their constructions and text formats.

mod families;
pub mod io;
mod products;
mod twins;
mod vertex_set;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

pub use families::*;
pub use products::{
    cartesian_product, corona_product, disjoint_union, join, line_graph, product_vertex, LineGraph,
};
pub use twins::{twin_partition, TwinClass, TwinKind, TwinPartition};
pub use vertex_set::VertexSet;

/// Largest order handled by the word-level solvers.
pub const SOLVER_MAX_N: usize = 64;

/// Immutable simple undirected graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph { n, adj, edge_count })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Borrowed open neighborhood. Panics when `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.adj[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// N(X): the union of the open neighborhoods of the members of `x`.
    pub fn set_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        if x.universe() != self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x.universe(),
                n: self.n,
            });
        }
        let mut out = VertexSet::new(self.n);
        for v in x {
            out.union_with(&self.adj[v]);
        }
        Ok(out)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// True when the graph has no edges.
    pub fn is_empty(&self) -> bool {
        self.edge_count == 0
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// I(G): number of vertices of degree one.
    pub fn degree_one_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| self.adj[v].len() + 1 == self.n),
        )
    }

    /// Connected components, each listed by its smallest vertex first.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in &self.adj[u] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// The order-0 graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count + 1 == self.n && self.is_connected()
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let index: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (pos[u], pos[v]));
        Graph::new(index.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parse(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Adjacency as single-word masks; fails above [`SOLVER_MAX_N`].
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.n > SOLVER_MAX_N {
            return Err(Error::TooLarge {
                what: "word-level solver",
                n: self.n,
                cap: SOLVER_MAX_N,
            });
        }
        Ok(self.adj.iter().map(|a| a.to_mask().unwrap_or(0)).collect())
    }

    /// Structural invariants every constructor must maintain.
    pub fn is_well_formed(&self) -> bool {
        let deg_sum: usize = self.adj.iter().map(VertexSet::len).sum();
        self.adj.len() == self.n
            && deg_sum == 2 * self.edge_count
            && (0..self.n).all(|u| {
                !self.adj[u].contains(u) && self.adj[u].iter().all(|v| self.adj[v].contains(u))
            })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_smallest_nonempty() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.open_neighborhood(0).unwrap().to_vec(), vec![1]);
        assert_eq!(g.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn empty_edge_list() {
        let g = Graph::new(4, []).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_empty());
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.is_well_formed());
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(g.open_neighborhood(5).is_err());
        assert!(g.closed_neighborhood(3).is_err());
    }

    #[test]
    fn degree_fixture_graph() {
        let g = Graph::new(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 6), (4, 6)],
        )
        .unwrap();
        assert_eq!(g.size(), 8);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_connected());
    }

    #[test]
    fn set_neighborhood_on_p4() {
        let g = path(4).unwrap();
        let x = VertexSet::from_vertices(4, [1, 3]);
        assert_eq!(g.set_neighborhood(&x).unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn predicates() {
        assert!(!cycle(5).unwrap().is_bipartite());
        let c6 = cycle(6).unwrap();
        let col = c6.bipartition().unwrap();
        for (u, v) in c6.edges() {
            assert_ne!(col[u], col[v]);
        }
        assert_eq!(star(4).unwrap().universal_vertices().to_vec(), vec![0]);
        assert_eq!(star(4).unwrap().degree_one_count(), 4);
        assert!(path(5).unwrap().is_tree());
        assert!(!cycle(5).unwrap().is_tree());
        assert!(!Graph::edgeless(2).is_connected());
        assert!(Graph::edgeless(0).is_connected());
    }

    #[test]
    fn masks_cap() {
        assert!(Graph::edgeless(64).masks().is_ok());
        assert!(matches!(
            Graph::edgeless(65).masks(),
            Err(Error::TooLarge { .. })
        ));
    }
}
