//! Graphs shared by the solver benchmarks.

use superdom::graph::{cartesian_product, complete, corona_product, cycle, hypercube, path, star};
use superdom::Graph;

/// Named instances, from small to the upper end of what the exact solvers handle quickly.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let ok = |r: superdom::Result<Graph>| r.expect("fixture parameters are valid");
    vec![
        ("cycle_16", ok(cycle(16))),
        ("path_20", ok(path(20))),
        ("hypercube_5", ok(hypercube(5))),
        ("k5_box_k4", cartesian_product(&ok(complete(5)), &ok(complete(4)))),
        ("star3_box_star3", cartesian_product(&ok(star(3)), &ok(star(3)))),
        ("corona_c5_p3", ok(corona_product(&ok(cycle(5)), &ok(path(3))))),
    ]
}
