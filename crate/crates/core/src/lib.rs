//! Exact super domination number of graphs, with the companion invariants,
//! closed formulas for settled families, and a harness that checks the known
//! bounds against exact values.
//!
//! A set `D` is super dominating when every vertex `u` outside `D` has some
//! `v` in `D` whose only neighbor outside `D` is `u`. The super domination
//! number `γ_sp(G)` is the minimum size of such a set.
//!
//! ```
//! use superdom::{graph::path, superdom::gamma_sp_bnb, SolverConfig};
//!
//! let outcome = gamma_sp_bnb(&path(7).unwrap(), &SolverConfig::default()).unwrap();
//! assert_eq!(outcome.value(), Some(4));
//! ```

pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod invariants;
pub(crate) mod search;
pub mod superdom;

use std::time::Duration;

pub use error::{Error, Result};
pub use graph::{Graph, TwinPartition, VertexSet};
pub use harness::{BoundCheckReport, BoundEntry};
pub use invariants::InvariantBundle;
pub use superdom::{LambdaWitness, SuperDomCertificate, SuperDomOutcome};

/// Caps and limits for the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order accepted by the brute-force γ_sp oracle.
    pub bruteforce_cap: usize,
    /// Largest order for full S(G) / P(S) / λ enumeration.
    pub enumeration_cap: usize,
    /// Largest order for secure domination (plain subset enumeration).
    pub secure_cap: usize,
    /// Wall-clock budget for one branch-and-bound run.
    pub timeout: Option<Duration>,
    /// Node budget for one branch-and-bound run; deterministic unlike `timeout`.
    pub node_limit: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            bruteforce_cap: 18,
            enumeration_cap: 12,
            secure_cap: 20,
            timeout: None,
            node_limit: None,
        }
    }
}
