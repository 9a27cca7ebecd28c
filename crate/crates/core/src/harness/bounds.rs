use serde::Serialize;

use super::profile::{profile, GraphProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::IdentityCheck;
use crate::SolverConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `lhs ≤ rhs`
    Le,
    /// `lhs = rhs`
    Eq,
}

/// One inequality or identity evaluated on exact values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub relation: Relation,
    pub applicable: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub holds: Option<bool>,
    /// `rhs − lhs`.
    pub slack: Option<i64>,
    pub tight: bool,
}

impl BoundEntry {
    fn evaluated(name: &'static str, statement: &'static str, relation: Relation, lhs: i64, rhs: i64) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        };
        BoundEntry {
            name,
            statement,
            relation,
            applicable: true,
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(holds),
            slack: Some(rhs - lhs),
            // equalities hold or fail; only inequalities can be tight
            tight: relation == Relation::Le && lhs == rhs,
        }
    }

    pub fn le(name: &'static str, statement: &'static str, lhs: i64, rhs: i64) -> Self {
        Self::evaluated(name, statement, Relation::Le, lhs, rhs)
    }

    pub fn eq(name: &'static str, statement: &'static str, lhs: i64, rhs: i64) -> Self {
        Self::evaluated(name, statement, Relation::Eq, lhs, rhs)
    }

    pub fn not_applicable(name: &'static str, statement: &'static str, relation: Relation) -> Self {
        BoundEntry {
            name,
            statement,
            relation,
            applicable: false,
            lhs: None,
            rhs: None,
            holds: None,
            slack: None,
            tight: false,
        }
    }

    /// Applicable, with only one side known (the exact value is out of reach).
    pub fn partial(name: &'static str, statement: &'static str, lhs: Option<i64>, rhs: Option<i64>) -> Self {
        BoundEntry {
            lhs,
            rhs,
            applicable: true,
            ..Self::not_applicable(name, statement, Relation::Le)
        }
    }

    pub fn gated(
        name: &'static str,
        statement: &'static str,
        relation: Relation,
        applicable: bool,
        sides: impl FnOnce() -> (i64, i64),
    ) -> Self {
        if applicable {
            let (lhs, rhs) = sides();
            Self::evaluated(name, statement, relation, lhs, rhs)
        } else {
            Self::not_applicable(name, statement, relation)
        }
    }

    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheckReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    /// Exact γ_sp, or `None` when the report was skipped.
    pub gamma_sp: Option<usize>,
    /// Why no bounds were evaluated, if they were not.
    pub skipped: Option<String>,
    pub entries: Vec<BoundEntry>,
    pub identities: Vec<IdentityCheck>,
}

impl BoundCheckReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.violated())
    }

    pub fn identity_failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identities.iter().filter(|c| !c.holds)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none() && self.identity_failures().next().is_none()
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn tight(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|e| e.tight).map(|e| e.name).collect()
    }
}

fn i(v: usize) -> i64 {
    v as i64
}

/// Evaluates every per-graph bound on the exact invariants in `p`.
pub fn bounds_from_profile(p: &GraphProfile) -> Vec<BoundEntry> {
    use Relation::*;
    let n = i(p.n);
    let sp = i(p.gamma_sp);
    let delta = i(p.max_degree);
    let t = i(p.twin_classes);
    vec![
        BoundEntry::le("order_floor", "⌈n/2⌉ ≤ γ_sp", i(p.n.div_ceil(2)), sp),
        BoundEntry::le("matching", "n − α′ ≤ γ_sp", n - i(p.matching), sp),
        BoundEntry::gated("bipartite_cover", "n − β ≤ γ_sp (bipartite)", Le, p.bipartite, || {
            (n - i(p.vertex_cover), sp)
        }),
        BoundEntry::gated("bipartite_independence", "α ≤ γ_sp (bipartite)", Le, p.bipartite, || {
            (i(p.independence), sp)
        }),
        BoundEntry::gated("secure", "γ_s ≤ γ_sp", Le, p.gamma_s.is_some(), || {
            (i(p.gamma_s.unwrap_or(0)), sp)
        }),
        BoundEntry::le("twins", "n − t ≤ γ_sp", n - t, sp),
        BoundEntry::gated(
            "twins_connected",
            "n − t + 1 ≤ γ_sp (connected, t ≥ 3)",
            Le,
            p.connected && p.twin_classes >= 3,
            || (n - t + 1, sp),
        ),
        BoundEntry::gated("order_minus_domination", "γ_sp ≤ n − γ (no isolates)", Le, p.isolate_free, || {
            (sp, n - i(p.gamma))
        }),
        BoundEntry::gated("order_minus_packing", "γ_sp ≤ n − ρ (no isolates)", Le, p.isolate_free, || {
            (sp, n - i(p.two_packing))
        }),
        BoundEntry::gated(
            "max_degree",
            "γ_sp ≤ ⌊nΔ/(Δ+1)⌋ (no isolates)",
            Le,
            p.isolate_free && p.n > 0,
            || (sp, n * delta / (delta + 1)),
        ),
        BoundEntry::gated(
            "line_graph_packing",
            "γ_sp ≤ n − ρ(L(G)) (at least one edge)",
            Le,
            p.line_two_packing.is_some(),
            || (sp, n - i(p.line_two_packing.unwrap_or(0))),
        ),
        BoundEntry::gated(
            "half_domination",
            "γ = n/2 ⇒ γ_sp = n/2 (no isolates)",
            Eq,
            p.isolate_free && 2 * p.gamma == p.n,
            || (sp, n / 2),
        ),
        BoundEntry::gated(
            "bipartite_domination_cover",
            "bipartite, γ = β ⇒ γ_sp = α (no isolates)",
            Eq,
            p.bipartite && p.isolate_free && p.gamma == p.vertex_cover,
            || (sp, i(p.independence)),
        ),
        BoundEntry::gated("order_ceiling", "γ_sp ≤ n − 1 (no isolates)", Le, p.isolate_free && p.n > 0, || {
            (sp, n - 1)
        }),
        BoundEntry::eq(
            "edgeless_characterization",
            "γ_sp = n ⇔ no edges",
            i((p.gamma_sp == p.n) as usize),
            i((p.m == 0) as usize),
        ),
        BoundEntry::eq(
            "unit_characterization",
            "γ_sp = 1 ⇔ G ≅ K1 or K2",
            i((p.gamma_sp == 1) as usize),
            i((p.n == 1 || (p.n == 2 && p.m == 1)) as usize),
        ),
        BoundEntry::gated("domination_vs_secure", "γ ≤ γ_s", Le, p.gamma_s.is_some(), || {
            (i(p.gamma), i(p.gamma_s.unwrap_or(0)))
        }),
        BoundEntry::le("packing_vs_domination", "ρ ≤ γ", i(p.two_packing), i(p.gamma)),
        BoundEntry::gated(
            "domination_degree_floor",
            "⌈n/(Δ+1)⌉ ≤ γ",
            Le,
            p.n > 0,
            || (i(p.n.div_ceil(p.max_degree + 1)), i(p.gamma)),
        ),
        BoundEntry::gated("domination_half", "γ ≤ ⌈n/2⌉ ≤ γ_sp (no isolates)", Le, p.isolate_free, || {
            (i(p.gamma), i(p.n.div_ceil(2)))
        }),
    ]
}

/// Runs every per-graph bound. A γ_sp search cut short by a timeout or node
/// limit yields a skipped report rather than guessed values.
pub fn check_all_bounds(graph_id: impl Into<String>, g: &Graph, config: &SolverConfig) -> Result<BoundCheckReport> {
    let graph_id = graph_id.into();
    match profile(g, config) {
        Ok(p) => Ok(BoundCheckReport {
            graph_id,
            n: p.n,
            m: p.m,
            gamma_sp: Some(p.gamma_sp),
            skipped: None,
            entries: bounds_from_profile(&p),
            identities: p.identities,
        }),
        Err(Error::NotApplicable(why)) => Ok(BoundCheckReport {
            graph_id,
            n: g.order(),
            m: g.size(),
            gamma_sp: None,
            skipped: Some(why),
            entries: Vec::new(),
            identities: Vec::new(),
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn report(g: &Graph) -> BoundCheckReport {
        check_all_bounds("t", g, &SolverConfig::default()).unwrap()
    }

    #[test]
    fn degree_fixture_tight_three_ways() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 6), (4, 6)]).unwrap();
        let r = report(&g);
        assert!(r.is_clean());
        assert_eq!(r.gamma_sp, Some(5));
        for name in ["order_minus_domination", "order_minus_packing", "max_degree"] {
            assert!(r.entry(name).unwrap().tight, "{name}");
        }
    }

    #[test]
    fn c8_matching_tight() {
        let r = report(&cycle(8).unwrap());
        assert!(r.is_clean());
        assert!(r.entry("matching").unwrap().tight);
    }

    #[test]
    fn gating_records_not_applicable() {
        let g = disjoint_union(&complete(2).unwrap(), &complete(1).unwrap());
        let r = report(&g);
        assert!(r.is_clean());
        assert!(!r.entry("max_degree").unwrap().applicable);
        assert!(!r.entry("bipartite_cover").unwrap().applicable || g.is_bipartite());
    }

    #[test]
    fn skipped_when_search_cut_short() {
        let cfg = SolverConfig {
            node_limit: Some(1),
            ..SolverConfig::default()
        };
        let r = check_all_bounds("c10", &cycle(10).unwrap(), &cfg).unwrap();
        assert!(r.skipped.is_some());
        assert!(r.entries.is_empty());
    }

    #[test]
    fn slack_nonnegative_when_holding() {
        let r = report(&petersen());
        for e in &r.entries {
            if e.holds == Some(true) && e.relation == Relation::Le {
                assert!(e.slack.unwrap() >= 0);
            }
        }
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, edges).unwrap()
    }
}
