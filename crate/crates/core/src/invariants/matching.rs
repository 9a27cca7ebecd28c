//! Maximum matching in general graphs by Edmonds' blossom algorithm.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn solve(mut self) -> Vec<usize> {
        let n = self.adj.len();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_path(root) {
                while u != NONE {
                    let pv = self.parent[u];
                    let ppv = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = ppv;
                }
            }
        }
        self.mate
    }
}

fn mate_array(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    Blossom::new(&adj).solve()
}

fn matched_pairs(mate: &[usize]) -> usize {
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// α'(G), the size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    matched_pairs(&mate_array(g.order(), &g.edges()))
}

/// A maximum matching with the smallest edge-index bitset, edges indexed in
/// lexicographic order of endpoints.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let edges = g.edges();
    let mut alive = vec![true; edges.len()];
    let mut mate = mate_array(n, &edges);
    let mut chosen = Vec::new();
    // From the highest index down, drop an edge whenever the remaining graph
    // keeps its matching number; otherwise the edge is in every maximum
    // matching of what is left and gets fixed.
    for i in (0..edges.len()).rev() {
        if !alive[i] {
            continue;
        }
        let (u, v) = edges[i];
        if mate[u] != v {
            alive[i] = false;
            continue;
        }
        alive[i] = false;
        let rest: Vec<(usize, usize)> = edges
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&e, _)| e)
            .collect();
        let trial = mate_array(n, &rest);
        if matched_pairs(&trial) == matched_pairs(&mate) {
            mate = trial;
        } else {
            chosen.push((u, v));
            mate[u] = NONE;
            mate[v] = NONE;
            for (j, &(a, b)) in edges.iter().enumerate() {
                if a == u || a == v || b == u || b == v {
                    alive[j] = false;
                }
            }
        }
    }
    chosen.reverse();
    chosen
}

/// Checks that `m` is a set of pairwise disjoint edges of `g`.
pub fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.order()];
    m.iter().all(|&(u, v)| {
        let ok = g.has_edge(u, v) && !used[u] && !used[v];
        if u < used.len() && v < used.len() {
            used[u] = true;
            used[v] = true;
        }
        ok
    })
}
