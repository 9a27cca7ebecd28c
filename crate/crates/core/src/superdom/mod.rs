//! Super dominating sets: the certificate checker, the brute-force oracle,
//! the branch-and-bound solver, and the S(G) / P(S) / λ machinery.

mod bnb;
mod bruteforce;
mod certificate;
mod families;

pub use bnb::gamma_sp_bnb;
pub use bruteforce::{bruteforce_outcome, gamma_sp_bruteforce};
pub use certificate::{is_super_dominating, SuperDomCertificate, SuperDomOutcome};
pub use families::{
    enumerate_min_superdom_sets, enumerate_pstar, free_members, lambda, universal_hypothesis,
    universal_vertex_checks, LambdaWitness, UniversalReport,
};

pub(crate) use bruteforce::{check_cap, k_subsets};
