//! Companion invariants: domination, secure domination, matching, vertex
//! cover, independence and 2-packing, each with a canonical certificate.

mod cover;
mod domination;
mod matching;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use cover::{
    independence_number, is_independent, is_two_packing, is_vertex_cover, two_packing_number,
    vertex_cover_number,
};
pub use domination::{domination_number, is_dominating, is_secure_dominating, secure_domination_number};
pub use matching::{is_matching, matching_number, maximum_matching};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::superdom::gamma_sp_bnb;
use crate::SolverConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    GammaSp,
    Gamma,
    GammaS,
    Matching,
    VertexCover,
    Independence,
    TwoPacking,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 7] = [
        InvariantKind::GammaSp,
        InvariantKind::Gamma,
        InvariantKind::GammaS,
        InvariantKind::Matching,
        InvariantKind::VertexCover,
        InvariantKind::Independence,
        InvariantKind::TwoPacking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::GammaSp => "gamma_sp",
            InvariantKind::Gamma => "gamma",
            InvariantKind::GammaS => "gamma_s",
            InvariantKind::Matching => "matching",
            InvariantKind::VertexCover => "vertex_cover",
            InvariantKind::Independence => "independence",
            InvariantKind::TwoPacking => "two_packing",
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let kind = match key.as_str() {
            "gamma_sp" | "gsp" => InvariantKind::GammaSp,
            "gamma" | "domination" => InvariantKind::Gamma,
            "gamma_s" | "secure" => InvariantKind::GammaS,
            "matching" | "alpha_prime" => InvariantKind::Matching,
            "vertex_cover" | "beta" | "cover" => InvariantKind::VertexCover,
            "independence" | "alpha" => InvariantKind::Independence,
            "two_packing" | "rho" | "packing" => InvariantKind::TwoPacking,
            _ => return Err(Error::Parse(format!("unknown invariant `{s}`"))),
        };
        Ok(kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    Vertices(VertexSet),
    Edges(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantEntry {
    pub name: InvariantKind,
    pub value: usize,
    pub certificate: Certificate,
    pub method: Method,
}

impl InvariantEntry {
    /// Checks the certificate against the invariant's defining predicate and size.
    pub fn validate(&self, g: &Graph) -> bool {
        match (&self.name, &self.certificate) {
            (InvariantKind::Matching, Certificate::Edges(m)) => is_matching(g, m) && m.len() == self.value,
            (kind, Certificate::Vertices(s)) => {
                s.len() == self.value
                    && match kind {
                        InvariantKind::GammaSp => crate::superdom::is_super_dominating(g, s).is_some(),
                        InvariantKind::Gamma => is_dominating(g, s),
                        InvariantKind::GammaS => is_secure_dominating(g, s),
                        InvariantKind::VertexCover => is_vertex_cover(g, s),
                        InvariantKind::Independence => is_independent(g, s),
                        InvariantKind::TwoPacking => is_two_packing(g, s),
                        InvariantKind::Matching => false,
                    }
            }
            _ => false,
        }
    }
}

/// Exact values of the requested invariants, in [`InvariantKind`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<InvariantEntry>,
}

impl InvariantBundle {
    pub fn get(&self, kind: InvariantKind) -> Option<usize> {
        self.entries.iter().find(|e| e.name == kind).map(|e| e.value)
    }
}

/// Computes one invariant. γ_sp fails with [`Error::NotApplicable`] when the
/// solver stops before proving optimality.
pub fn compute_invariant(g: &Graph, kind: InvariantKind, config: &SolverConfig) -> Result<InvariantEntry> {
    let vertices = |(value, set): (usize, VertexSet)| (value, Certificate::Vertices(set));
    let (value, certificate) = match kind {
        InvariantKind::GammaSp => {
            let outcome = gamma_sp_bnb(g, config)?;
            match outcome.exact {
                true => (outcome.upper, Certificate::Vertices(outcome.certificate.set)),
                false => {
                    return Err(Error::NotApplicable(format!(
                        "γ_sp search stopped early; value lies in [{}, {}]",
                        outcome.lower, outcome.upper
                    )))
                }
            }
        }
        InvariantKind::Gamma => vertices(domination_number(g)?),
        InvariantKind::GammaS => vertices(secure_domination_number(g, config)?),
        InvariantKind::Matching => {
            let m = maximum_matching(g);
            (m.len(), Certificate::Edges(m))
        }
        InvariantKind::VertexCover => vertices(vertex_cover_number(g)?),
        InvariantKind::Independence => vertices(independence_number(g)?),
        InvariantKind::TwoPacking => vertices(two_packing_number(g)?),
    };
    Ok(InvariantEntry {
        name: kind,
        value,
        certificate,
        method: Method::Exact,
    })
}

pub fn compute_bundle(g: &Graph, kinds: &[InvariantKind], config: &SolverConfig) -> Result<InvariantBundle> {
    let mut kinds = kinds.to_vec();
    kinds.sort();
    kinds.dedup();
    let entries = kinds
        .into_iter()
        .map(|k| compute_invariant(g, k, config))
        .collect::<Result<_>>()?;
    Ok(InvariantBundle {
        n: g.order(),
        m: g.size(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, applicable: bool, lhs: usize, rhs: usize) -> Self {
        IdentityCheck {
            name,
            applicable,
            lhs,
            rhs,
            holds: !applicable || lhs == rhs,
        }
    }
}

/// α + β = n always, α′ = β on bipartite graphs, γ = ρ on trees.
pub fn identity_crosschecks(g: &Graph) -> Result<Vec<IdentityCheck>> {
    let n = g.order();
    let (alpha, _) = independence_number(g)?;
    let (beta, _) = vertex_cover_number(g)?;
    let matching = matching_number(g);
    let tree = g.is_tree();
    let (gamma, rho) = if tree {
        (domination_number(g)?.0, two_packing_number(g)?.0)
    } else {
        (0, 0)
    };
    Ok(vec![
        IdentityCheck::new("independence_plus_cover", true, alpha + beta, n),
        IdentityCheck::new("matching_equals_cover", g.is_bipartite(), matching, beta),
        IdentityCheck::new("tree_domination_equals_packing", tree, gamma, rho),
    ])
}
