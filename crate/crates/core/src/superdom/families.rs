//! The families S(G) and P(S), the parameter λ(G), and the universal-vertex checks.

use std::collections::BTreeSet;

use serde::Serialize;

use super::bnb::gamma_sp_bnb;
use super::bruteforce::{check_cap, k_subsets};
use super::certificate::is_super_dominating;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::SolverConfig;

fn exact_gamma_sp(g: &Graph, config: &SolverConfig) -> Result<usize> {
    let exact = SolverConfig {
        timeout: None,
        node_limit: None,
        ..config.clone()
    };
    Ok(gamma_sp_bnb(g, &exact)?.upper)
}

/// S(G): every minimum super dominating set, in increasing integer order.
pub fn enumerate_min_superdom_sets(g: &Graph, config: &SolverConfig) -> Result<Vec<VertexSet>> {
    check_cap(g, "S(G) enumeration", config.enumeration_cap)?;
    let n = g.order();
    let k = exact_gamma_sp(g, config)?;
    Ok(k_subsets(n, k)
        .map(|m| VertexSet::from_mask(n, m))
        .filter(|d| is_super_dominating(g, d).is_some())
        .collect())
}

/// Private witnesses of each outside vertex: `(u, [v ∈ S : N(v) ∩ S̄ = {u}])`.
fn private_witnesses(g: &Graph, s: &VertexSet) -> Vec<(usize, Vec<usize>)> {
    let outside = s.complement();
    outside
        .iter()
        .map(|u| {
            let ws = g
                .neighbors(u)
                .iter()
                .filter(|&v| s.contains(v) && g.neighbors(v).intersection_len(&outside) == 1)
                .collect();
            (u, ws)
        })
        .collect()
}

fn pstar_unchecked(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    // In the bipartite graph {(v, u) : N(v) ∩ S̄ = {u}} every v has degree
    // one, so perfect matchings of S̄ are exactly one independent choice of
    // witness per outside vertex.
    let choices = private_witnesses(g, s);
    let mut found = BTreeSet::new();
    let mut current = VertexSet::new(g.order());
    fn walk(i: usize, choices: &[(usize, Vec<usize>)], cur: &mut VertexSet, out: &mut BTreeSet<VertexSet>) {
        if i == choices.len() {
            out.insert(cur.clone());
            return;
        }
        for &w in &choices[i].1 {
            cur.insert(w);
            walk(i + 1, choices, cur, out);
            cur.remove(w);
        }
    }
    walk(0, &choices, &mut current, &mut found);
    found.into_iter().collect()
}

/// P(S): the witness sets `S* ⊆ S` with `|S*| = |S̄|` realising every outside vertex.
/// `S` must be a minimum super dominating set.
pub fn enumerate_pstar(g: &Graph, s: &VertexSet, config: &SolverConfig) -> Result<Vec<VertexSet>> {
    check_cap(g, "P(S) enumeration", config.enumeration_cap)?;
    if s.universe() != g.order() || is_super_dominating(g, s).is_none() {
        return Err(Error::NotMinimum(format!("{s} (not super dominating)")));
    }
    let k = exact_gamma_sp(g, config)?;
    if s.len() != k {
        return Err(Error::NotMinimum(format!("{s} (size {} but γ_sp = {k})", s.len())));
    }
    Ok(pstar_unchecked(g, s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaWitness {
    pub set: VertexSet,
    pub witnesses: VertexSet,
    /// Members of `S` whose neighborhoods avoid `S̄ ∪ S*`.
    pub free: VertexSet,
    pub value: usize,
}

/// Largest `X ⊆ S` with `N(X) ∩ blocked = ∅`. The condition is per vertex,
/// so the maximum takes every qualifying member at once.
pub fn free_members(g: &Graph, s: &VertexSet, blocked: &VertexSet) -> VertexSet {
    VertexSet::from_vertices(
        g.order(),
        s.iter().filter(|&x| !g.neighbors(x).intersects(blocked)),
    )
}

/// λ(G) with a witness `(S, S*, X)`; the first maximiser in integer order of `S`, then `S*`.
pub fn lambda(g: &Graph, config: &SolverConfig) -> Result<(usize, LambdaWitness)> {
    let mut best: Option<LambdaWitness> = None;
    for s in enumerate_min_superdom_sets(g, config)? {
        let outside = s.complement();
        for sstar in pstar_unchecked(g, &s) {
            let free = free_members(g, &s, &outside.union(&sstar));
            if best.as_ref().is_none_or(|b| free.len() > b.value) {
                best = Some(LambdaWitness {
                    set: s.clone(),
                    witnesses: sstar,
                    value: free.len(),
                    free,
                });
            }
        }
    }
    let w = best.expect("S(G) and P(S) are never empty");
    Ok((w.value, w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalReport {
    pub universal: Vec<usize>,
    pub gamma_sp: usize,
    pub n: usize,
    /// Pairs `(S, S*)` with a universal vertex in `S̄ ∪ S*`.
    pub pairs_with_universal_blocked: usize,
    /// If a universal vertex is ever in `S̄ ∪ S*` then `γ_sp = n - 1`.
    pub blocked_forces_n_minus_one: bool,
    /// Some `(S, S*)` keeps a universal vertex out of `S̄ ∪ S*`.
    pub universal_free: bool,
    pub lambda: usize,
    pub degree_one: usize,
    /// `λ(G) ≥ I(G)`, evaluated only under the hypothesis.
    pub lambda_covers_degree_one: Option<bool>,
}

/// Checks the universal-vertex statements over every `S ∈ S(G)`, `S* ∈ P(S)`.
pub fn universal_vertex_checks(g: &Graph, config: &SolverConfig) -> Result<UniversalReport> {
    let universal = g.universal_vertices();
    if universal.is_empty() {
        return Err(Error::NotApplicable("graph has no universal vertex".into()));
    }
    let n = g.order();
    let sets = enumerate_min_superdom_sets(g, config)?;
    let gamma_sp = sets[0].len();
    let mut blocked_pairs = 0;
    let mut hypothesis = false;
    for s in &sets {
        let outside = s.complement();
        for sstar in pstar_unchecked(g, s) {
            let blocked = outside.union(&sstar);
            if universal.intersects(&blocked) {
                blocked_pairs += 1;
            }
            if universal.iter().any(|v| !blocked.contains(v)) {
                hypothesis = true;
            }
        }
    }
    let (lam, _) = lambda(g, config)?;
    let degree_one = g.degree_one_count();
    Ok(UniversalReport {
        universal: universal.to_vec(),
        gamma_sp,
        n,
        pairs_with_universal_blocked: blocked_pairs,
        blocked_forces_n_minus_one: blocked_pairs == 0 || gamma_sp + 1 == n,
        universal_free: hypothesis,
        lambda: lam,
        degree_one,
        lambda_covers_degree_one: hypothesis.then_some(lam >= degree_one),
    })
}

/// Whether some `S ∈ S(G)`, `S* ∈ P(S)` leaves a universal vertex outside `S̄ ∪ S*`.
pub fn universal_hypothesis(g: &Graph, config: &SolverConfig) -> Result<bool> {
    let universal = g.universal_vertices();
    if universal.is_empty() {
        return Ok(false);
    }
    for s in enumerate_min_superdom_sets(g, config)? {
        let outside = s.complement();
        for sstar in pstar_unchecked(g, &s) {
            let blocked = outside.union(&sstar);
            if universal.iter().any(|v| !blocked.contains(v)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn k2_family() {
        let g = complete(2).unwrap();
        assert_eq!(
            enumerate_min_superdom_sets(&g, &cfg()).unwrap(),
            vec![vs(2, &[0]), vs(2, &[1])]
        );
        assert_eq!(enumerate_pstar(&g, &vs(2, &[0]), &cfg()).unwrap(), vec![vs(2, &[0])]);
    }

    #[test]
    fn p4_family() {
        let g = path(4).unwrap();
        assert_eq!(
            enumerate_min_superdom_sets(&g, &cfg()).unwrap(),
            vec![vs(4, &[1, 2]), vs(4, &[0, 3])]
        );
    }

    #[test]
    fn pstar_rejects_non_minimum() {
        let g = path(4).unwrap();
        assert!(matches!(
            enumerate_pstar(&g, &vs(4, &[0, 1, 2]), &cfg()),
            Err(Error::NotMinimum(_))
        ));
        assert!(matches!(
            enumerate_pstar(&g, &vs(4, &[0, 2]), &cfg()),
            Err(Error::NotMinimum(_))
        ));
    }

    #[test]
    fn complete_lambda_zero() {
        for n in 2..6 {
            assert_eq!(lambda(&complete(n).unwrap(), &cfg()).unwrap().0, 0);
        }
    }

    #[test]
    fn star_universal_checks() {
        let r = universal_vertex_checks(&star(4).unwrap(), &cfg()).unwrap();
        assert!(r.blocked_forces_n_minus_one);
        assert_eq!(r.gamma_sp, 4);
        assert!(universal_vertex_checks(&path(4).unwrap(), &cfg()).is_err());
    }
}
