//! Checks the known inequalities and identities for γ_sp against exact
//! values over fixtures, exhaustive small-graph sweeps and random corpora.

mod bounds;
mod cartesian;
mod profile;
mod sweep;
mod vizing;

use rayon::prelude::*;

pub use bounds::{bounds_from_profile, check_all_bounds, BoundCheckReport, BoundEntry, Relation};
pub use cartesian::{check_cartesian_bounds, CartesianReport};
pub use profile::{profile, GraphProfile};
pub use sweep::{
    all_labeled, corpus_for, exhaustive_sweep, labeled_graph, random_corpus, BoundStats, RandomCorpus, SweepMode,
    SweepOutcome, SweepSummary, Violation, ALL_LABELED_MAX_N,
};
pub use vizing::{connected_labeled, vizing_like_scan, VizingCounterexample, VizingPair, VizingReport};

use crate::error::{Error, Result};

/// Maps `f` over `items` on a pool of `workers` threads, keeping input order.
pub fn run_parallel<T, R, F>(items: Vec<T>, workers: usize, f: F) -> Result<Vec<R>>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    Ok(pool.install(|| items.into_par_iter().map(f).collect()))
}
