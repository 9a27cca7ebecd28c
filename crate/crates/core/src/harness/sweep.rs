use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::bounds::{check_all_bounds, BoundCheckReport};
use super::run_parallel;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::SolverConfig;

/// Largest order for the all-labeled enumeration (2^15 graphs at n = 6).
pub const ALL_LABELED_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomCorpus {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Edge probabilities, cycled over the corpus.
    pub densities: Vec<f64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepMode {
    /// Every labeled graph with `n_min ≤ n ≤ n_max`.
    AllLabeled {
        n_min: usize,
        n_max: usize,
        isolate_free: bool,
    },
    /// Named graphs, e.g. parsed from a graph6 file.
    Corpus(Vec<(String, Graph)>),
    Random(RandomCorpus),
}

/// Labeled graph number `code` on `n` vertices: bit `k` selects the `k`-th
/// pair in lexicographic order.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are in range")
}

/// All labeled graphs on `n` vertices, in code order, with their ids.
pub fn all_labeled(n: usize, isolate_free: bool) -> Result<Vec<(String, Graph)>> {
    if n > ALL_LABELED_MAX_N {
        return Err(Error::TooLarge {
            what: "all-labeled enumeration",
            n,
            cap: ALL_LABELED_MAX_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs)
        .map(|code| (format!("n{n}-{code}"), labeled_graph(n, code)))
        .filter(|(_, g)| !isolate_free || !g.has_isolated_vertex())
        .collect())
}

/// Seeded G(n, p) graphs. Generation is sequential, so the corpus depends
/// only on the configuration.
pub fn random_corpus(cfg: &RandomCorpus) -> Result<Vec<(String, Graph)>> {
    if cfg.n_min > cfg.n_max || cfg.densities.is_empty() {
        return Err(Error::Parse("random corpus needs n_min ≤ n_max and at least one density".into()));
    }
    if let Some(p) = cfg.densities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::Parse(format!("density {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok((0..cfg.count)
        .map(|i| {
            let n = rng.gen_range(cfg.n_min..=cfg.n_max);
            let p = cfg.densities[i % cfg.densities.len()];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).expect("pairs are in range");
            (format!("rand-{}-{i}", cfg.seed), g)
        })
        .collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundStats {
    pub applicable: usize,
    pub holds: usize,
    pub violated: usize,
    pub tight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub bound: &'static str,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub identity_failures: Vec<Violation>,
    pub per_bound: BTreeMap<&'static str, BoundStats>,
    pub identities: BTreeMap<&'static str, BoundStats>,
}

impl SweepSummary {
    pub fn from_reports(reports: &[BoundCheckReport]) -> Self {
        let mut s = SweepSummary {
            graphs: reports.len(),
            ..SweepSummary::default()
        };
        for r in reports {
            if r.skipped.is_some() {
                s.skipped += 1;
                continue;
            }
            for e in &r.entries {
                let st = s.per_bound.entry(e.name).or_default();
                if e.applicable {
                    st.applicable += 1;
                }
                match e.holds {
                    Some(true) => st.holds += 1,
                    Some(false) => {
                        st.violated += 1;
                        s.violations.push(Violation {
                            graph_id: r.graph_id.clone(),
                            bound: e.name,
                            lhs: e.lhs,
                            rhs: e.rhs,
                        });
                    }
                    None => {}
                }
                if e.tight {
                    st.tight += 1;
                }
            }
            for c in &r.identities {
                let st = s.identities.entry(c.name).or_default();
                if !c.applicable {
                    continue;
                }
                st.applicable += 1;
                if c.holds {
                    st.holds += 1;
                    st.tight += 1;
                } else {
                    st.violated += 1;
                    s.identity_failures.push(Violation {
                        graph_id: r.graph_id.clone(),
                        bound: c.name,
                        lhs: Some(c.lhs as i64),
                        rhs: Some(c.rhs as i64),
                    });
                }
            }
        }
        s
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.identity_failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub summary: SweepSummary,
    pub reports: Vec<BoundCheckReport>,
}

pub fn corpus_for(mode: &SweepMode) -> Result<Vec<(String, Graph)>> {
    match mode {
        SweepMode::AllLabeled {
            n_min,
            n_max,
            isolate_free,
        } => {
            let mut out = Vec::new();
            for n in *n_min..=*n_max {
                out.extend(all_labeled(n, *isolate_free)?);
            }
            Ok(out)
        }
        SweepMode::Corpus(graphs) => Ok(graphs.clone()),
        SweepMode::Random(cfg) => random_corpus(cfg),
    }
}

/// Runs every per-graph bound over the corpus on `workers` threads. Reports
/// keep corpus order, so output does not depend on the worker count.
pub fn exhaustive_sweep(mode: &SweepMode, config: &SolverConfig, workers: usize) -> Result<SweepOutcome> {
    let corpus = corpus_for(mode)?;
    let reports = run_parallel(corpus, workers, |(id, g)| check_all_bounds(id, &g, config))?
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepOutcome {
        summary: SweepSummary::from_reports(&reports),
        reports,
    })
}
