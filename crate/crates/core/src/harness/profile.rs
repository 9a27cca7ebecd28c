use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{line_graph, twin_partition, Graph};
use crate::invariants::{
    domination_number, identity_crosschecks, independence_number, matching_number, secure_domination_number,
    two_packing_number, vertex_cover_number, IdentityCheck,
};
use crate::superdom::gamma_sp_bnb;
use crate::SolverConfig;

/// Every exact invariant the per-graph bounds need, computed once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub n: usize,
    pub m: usize,
    pub gamma_sp: usize,
    pub gamma: usize,
    /// `None` above the secure-domination cap.
    pub gamma_s: Option<usize>,
    pub matching: usize,
    pub vertex_cover: usize,
    pub independence: usize,
    pub two_packing: usize,
    /// 2-packing number of the line graph; `None` without edges or when L(G) is too large.
    pub line_two_packing: Option<usize>,
    pub twin_classes: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub isolate_free: bool,
    pub tree: bool,
    #[serde(skip)]
    pub identities: Vec<IdentityCheck>,
}

/// Builds the profile, or `Err(NotApplicable)` if the γ_sp search was cut short.
pub fn profile(g: &Graph, config: &SolverConfig) -> Result<GraphProfile> {
    let outcome = gamma_sp_bnb(g, config)?;
    let Some(gamma_sp) = outcome.value() else {
        return Err(Error::NotApplicable(format!(
            "γ_sp search stopped early with value in [{}, {}]",
            outcome.lower, outcome.upper
        )));
    };
    let gamma_s = match secure_domination_number(g, config) {
        Ok((v, _)) => Some(v),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let line_two_packing = if g.is_empty() {
        None
    } else {
        match two_packing_number(&line_graph(g)?.graph) {
            Ok((v, _)) => Some(v),
            Err(Error::TooLarge { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    Ok(GraphProfile {
        n: g.order(),
        m: g.size(),
        gamma_sp,
        gamma: domination_number(g)?.0,
        gamma_s,
        matching: matching_number(g),
        vertex_cover: vertex_cover_number(g)?.0,
        independence: independence_number(g)?.0,
        two_packing: two_packing_number(g)?.0,
        line_two_packing,
        twin_classes: twin_partition(g).count(),
        max_degree: g.max_degree(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        isolate_free: !g.has_isolated_vertex(),
        tree: g.is_tree(),
        identities: identity_crosschecks(g)?,
    })
}
