//! Branch-and-bound for γ_sp.
//!
//! The search grows the outside set `X = D̄` one vertex at a time. A partial
//! state is kept only while every `u ∈ X` still has a candidate witness:
//! some `v ∉ X` adjacent to `u` with `N(v) ∩ X = {u}`. Because `X` only grows,
//! a vertex that sees two members of `X` is dead as a witness forever, and
//! any state satisfying the invariant is itself a valid solution with every
//! undecided vertex placed in `D`.

use std::time::{Duration, Instant};

use super::certificate::{is_super_dominating, SuperDomOutcome};
use crate::error::Result;
use crate::graph::{twin_partition, Graph, VertexSet};
use crate::invariants::matching_number;
use crate::search::{all_mask, bit, ones, Bits};
use crate::SolverConfig;

const CHECK_EVERY: u64 = 1 << 12;

struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
}

struct OutsideSearch<'a> {
    adj: &'a [u64],
    all: u64,
    order: Vec<usize>,
    /// upper bound on |X| from global invariants
    cap: usize,
    /// smallest |X| worth recording next
    need: usize,
    best: Option<u64>,
    stop_at_first: bool,
    done: bool,
    nodes: u64,
    limits: &'a Limits,
    aborted: bool,
}

impl OutsideSearch<'_> {
    fn has_witness(&self, u: usize, out: u64) -> bool {
        Bits(self.adj[u] & !out).any(|v| self.adj[v] & out == bit(u))
    }

    fn feasible_after_adding(&self, w: usize, out: u64) -> bool {
        let out = out | bit(w);
        // only members within distance two of w can lose a witness
        let mut near = self.adj[w] | bit(w);
        for v in Bits(self.adj[w]) {
            near |= self.adj[v];
        }
        Bits(out & near).all(|u| self.has_witness(u, out))
    }

    /// Upper bound on the final |X| reachable from this state.
    fn bound(&self, out: u64, undecided: u64) -> (usize, u64) {
        let free_witnesses = Bits(self.all & !out)
            .filter(|&v| self.adj[v] & out == 0)
            .fold(0u64, |m, v| m | bit(v));
        let addable = Bits(undecided)
            .filter(|&w| self.adj[w] & free_witnesses != 0)
            .fold(0u64, |m, w| m | bit(w));
        let extra = ones(addable)
            .min(ones(free_witnesses))
            .min(ones(addable | free_witnesses) / 2);
        ((ones(out) + extra).min(self.cap), addable)
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(limit) = self.limits.node_limit {
            if self.nodes > limit {
                self.aborted = true;
            }
        }
        if self.nodes.is_multiple_of(CHECK_EVERY) {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn run(&mut self, pos: usize, in_d: u64, out: u64) {
        if self.done || self.tick() {
            return;
        }
        let size = ones(out);
        if size >= self.need {
            self.need = size + 1;
            self.best = Some(out);
            if self.stop_at_first {
                self.done = true;
                return;
            }
        }
        let undecided = self.all & !(in_d | out);
        if undecided == 0 {
            return;
        }
        let (ub, addable) = self.bound(out, undecided);
        if ub < self.need {
            return;
        }
        let mut pos = pos;
        while undecided & bit(self.order[pos]) == 0 {
            pos += 1;
        }
        let w = self.order[pos];
        if addable & bit(w) != 0 && self.feasible_after_adding(w, out) {
            self.run(pos + 1, in_d, out | bit(w));
        }
        self.run(pos + 1, in_d | bit(w), out);
    }
}

fn greedy_outside(adj: &[u64], order: &[usize]) -> u64 {
    let mut out = 0u64;
    for &w in order {
        let trial = out | bit(w);
        if Bits(trial).all(|u| Bits(adj[u] & !trial).any(|v| adj[v] & trial == bit(u))) {
            out = trial;
        }
    }
    out
}

/// Upper bound on |D̄| from the matching, twin and half-order bounds.
fn outside_cap(g: &Graph) -> usize {
    let n = g.order();
    let t = twin_partition(g).count();
    let twin_cap = if g.is_connected() && t >= 3 { t - 1 } else { t };
    (n / 2).min(matching_number(g)).min(twin_cap)
}

/// Exact γ_sp by branch-and-bound with the integer-smallest optimal `D`.
///
/// When a time or node limit interrupts the search, the outcome carries the
/// proven interval and `exact == false`.
pub fn gamma_sp_bnb(g: &Graph, config: &SolverConfig) -> Result<SuperDomOutcome> {
    let adj = g.masks()?;
    let n = g.order();
    let limits = Limits {
        deadline: config.timeout.map(|t: Duration| Instant::now() + t),
        node_limit: config.node_limit,
    };
    let cap = outside_cap(g);

    // descending degree, ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(ones(adj[v])), v));

    let seed = greedy_outside(&adj, &order);
    let mut search = OutsideSearch {
        adj: &adj,
        all: all_mask(n),
        order,
        cap,
        need: ones(seed) + 1,
        best: Some(seed),
        stop_at_first: false,
        done: false,
        nodes: 0,
        limits: &limits,
        aborted: false,
    };
    search.run(0, 0, 0);
    let found = search.best.unwrap();
    let best_size = ones(found);

    if search.aborted {
        let certificate = is_super_dominating(g, &VertexSet::from_mask(n, all_mask(n) & !found))
            .expect("search states are valid solutions");
        return Ok(SuperDomOutcome {
            lower: n - cap,
            upper: n - best_size,
            certificate,
            exact: false,
        });
    }

    // Second pass: highest index first, outside first, so the first state
    // reaching the optimum has the smallest D as an integer.
    let mut canon = OutsideSearch {
        adj: &adj,
        all: all_mask(n),
        order: (0..n).rev().collect(),
        cap,
        need: best_size,
        best: None,
        stop_at_first: true,
        done: false,
        nodes: 0,
        limits: &limits,
        aborted: false,
    };
    canon.run(0, 0, 0);
    let outside = canon.best.filter(|_| !canon.aborted).unwrap_or(found);
    let d = VertexSet::from_mask(n, all_mask(n) & !outside);
    let certificate = is_super_dominating(g, &d).expect("search states are valid solutions");
    Ok(SuperDomOutcome {
        lower: n - best_size,
        upper: n - best_size,
        certificate,
        exact: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn value(g: &Graph) -> usize {
        gamma_sp_bnb(g, &SolverConfig::default()).unwrap().value().unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(value(&cycle(9).unwrap()), 5);
        assert_eq!(value(&complete_bipartite(3, 4).unwrap()), 5);
        assert_eq!(value(&hypercube(4).unwrap()), 8);
        assert_eq!(value(&complete(1).unwrap()), 1);
        assert_eq!(value(&complete(2).unwrap()), 1);
        assert_eq!(value(&Graph::edgeless(0)), 0);
        assert_eq!(value(&empty(4).unwrap()), 4);
    }

    #[test]
    fn canonical_certificate() {
        // the super dominating 2-sets of P_4 are {1,2} and {0,3}
        let out = gamma_sp_bnb(&path(4).unwrap(), &SolverConfig::default()).unwrap();
        assert_eq!(out.certificate.set.to_vec(), vec![1, 2]);
        assert!(out.certificate.validate(&path(4).unwrap()));
    }

    #[test]
    fn node_limit_gives_interval() {
        // the greedy seed on C_10 is below the outside cap, so the search must branch
        let g = cycle(10).unwrap();
        let cfg = SolverConfig {
            node_limit: Some(1),
            ..SolverConfig::default()
        };
        let out = gamma_sp_bnb(&g, &cfg).unwrap();
        assert!(!out.exact);
        assert_eq!(out.value(), None);
        assert!(out.lower <= 6 && 6 <= out.upper);
        assert!(out.certificate.validate(&g));
    }
}
