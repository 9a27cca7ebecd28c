use serde::Serialize;

use super::run_parallel;
use crate::error::Result;
use crate::graph::{cartesian_product, Graph, SOLVER_MAX_N};
use crate::superdom::{gamma_sp_bnb, SuperDomCertificate};
use crate::SolverConfig;

/// A pair with `γ_sp(G□H) < γ_sp(G)γ_sp(H)`, with everything needed to recheck it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizingCounterexample {
    pub g_id: String,
    pub h_id: String,
    pub g: Graph,
    pub h: Graph,
    pub product: Graph,
    pub gamma_sp_g: SuperDomCertificate,
    pub gamma_sp_h: SuperDomCertificate,
    pub gamma_sp_product: SuperDomCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizingPair {
    pub g_id: String,
    pub h_id: String,
    pub gamma_sp_g: usize,
    pub gamma_sp_h: usize,
    /// `None` when the product is over the solver envelope or the search was cut short.
    pub gamma_sp_product: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizingReport {
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub pairs: Vec<VizingPair>,
    pub counterexamples: Vec<VizingCounterexample>,
}

/// Tests `γ_sp(G□H) ≥ γ_sp(G)γ_sp(H)` on every unordered pair of the corpus
/// (including a graph with itself). Falsification only.
pub fn vizing_like_scan(corpus: &[(String, Graph)], config: &SolverConfig, workers: usize) -> Result<VizingReport> {
    let certs = run_parallel(corpus.to_vec(), workers, |(_, g)| {
        gamma_sp_bnb(&g, config).map(|o| o.exact.then_some(o.certificate))
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut jobs = Vec::new();
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            jobs.push((i, j));
        }
    }
    let results = run_parallel(jobs, workers, |(i, j)| -> Result<(VizingPair, Option<VizingCounterexample>)> {
        let (g_id, g) = &corpus[i];
        let (h_id, h) = &corpus[j];
        let mut pair = VizingPair {
            g_id: g_id.clone(),
            h_id: h_id.clone(),
            gamma_sp_g: certs[i].as_ref().map_or(0, |c| c.size()),
            gamma_sp_h: certs[j].as_ref().map_or(0, |c| c.size()),
            gamma_sp_product: None,
        };
        let (Some(cg), Some(ch)) = (&certs[i], &certs[j]) else {
            return Ok((pair, None));
        };
        if g.order() * h.order() > SOLVER_MAX_N {
            return Ok((pair, None));
        }
        let product = cartesian_product(g, h);
        let outcome = gamma_sp_bnb(&product, config)?;
        let Some(v) = outcome.value() else {
            return Ok((pair, None));
        };
        pair.gamma_sp_product = Some(v);
        let counterexample = (v < cg.size() * ch.size()).then(|| VizingCounterexample {
            g_id: g_id.clone(),
            h_id: h_id.clone(),
            g: g.clone(),
            h: h.clone(),
            product,
            gamma_sp_g: cg.clone(),
            gamma_sp_h: ch.clone(),
            gamma_sp_product: outcome.certificate,
        });
        Ok((pair, counterexample))
    })?;
    let mut report = VizingReport {
        pairs_checked: 0,
        pairs_skipped: 0,
        pairs: Vec::new(),
        counterexamples: Vec::new(),
    };
    for r in results {
        let (pair, counterexample) = r?;
        if pair.gamma_sp_product.is_some() {
            report.pairs_checked += 1;
        } else {
            report.pairs_skipped += 1;
        }
        report.pairs.push(pair);
        report.counterexamples.extend(counterexample);
    }
    Ok(report)
}

/// Connected labeled graphs with `1 ≤ n ≤ n_max`.
pub fn connected_labeled(n_max: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(super::sweep::all_labeled(n, false)?.into_iter().filter(|(_, g)| g.is_connected()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn connected_counts() {
        // 1 + 1 + 4 + 38 connected labeled graphs
        assert_eq!(connected_labeled(4).unwrap().len(), 44);
    }

    #[test]
    fn small_scan() {
        let corpus = vec![
            ("K2".to_string(), complete(2).unwrap()),
            ("K3".to_string(), complete(3).unwrap()),
            ("P4".to_string(), path(4).unwrap()),
        ];
        let r = vizing_like_scan(&corpus, &SolverConfig::default(), 2).unwrap();
        assert_eq!(r.pairs_checked, 6);
        assert!(r.counterexamples.is_empty());
        let p = |a: &str, b: &str| r.pairs.iter().find(|x| x.g_id == a && x.h_id == b).unwrap().gamma_sp_product;
        assert_eq!(p("P4", "P4"), Some(8));
        assert_eq!(p("K3", "K3"), Some(6));
        assert_eq!(p("K2", "K2"), Some(2));
    }
}
