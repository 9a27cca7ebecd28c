use super::certificate::{is_super_dominating, SuperDomCertificate, SuperDomOutcome};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::SolverConfig;

/// All `k`-subsets of `0..n` as masks, in increasing integer order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "subset enumeration needs n <= 63");
    let limit = 1u64 << n;
    let first = if k > n { limit } else { (1u64 << k) - 1 };
    let mut next = Some(first).filter(|&m| m < limit);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            Some(nxt).filter(|&m| m < limit)
        };
        Some(cur)
    })
}

pub(crate) fn check_cap(g: &Graph, what: &'static str, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::TooLarge { what, n: g.order(), cap })
    } else {
        Ok(())
    }
}

/// γ_sp by trying subsets in ascending size from `⌈n/2⌉`, each size in
/// increasing integer order. Returns the first super dominating set found.
pub fn gamma_sp_bruteforce(g: &Graph, config: &SolverConfig) -> Result<(usize, SuperDomCertificate)> {
    check_cap(g, "brute-force oracle", config.bruteforce_cap)?;
    let n = g.order();
    for k in n.div_ceil(2)..=n {
        for mask in k_subsets(n, k) {
            if let Some(c) = is_super_dominating(g, &VertexSet::from_mask(n, mask)) {
                return Ok((k, c));
            }
        }
    }
    unreachable!("V(G) is always super dominating")
}

/// Wraps the brute-force result in the outcome type used by the B&B.
pub fn bruteforce_outcome(g: &Graph, config: &SolverConfig) -> Result<SuperDomOutcome> {
    let (k, certificate) = gamma_sp_bruteforce(g, config)?;
    Ok(SuperDomOutcome {
        lower: k,
        upper: k,
        certificate,
        exact: true,
    })
}
