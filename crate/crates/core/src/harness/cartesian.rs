use serde::Serialize;

use super::bounds::{BoundEntry, Relation};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph, SOLVER_MAX_N};
use crate::invariants::{independence_number, vertex_cover_number};
use crate::superdom::{gamma_sp_bnb, lambda, universal_hypothesis, SuperDomCertificate};
use crate::SolverConfig;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartesianReport {
    pub n: usize,
    pub n_prime: usize,
    pub gamma_sp_g: usize,
    pub gamma_sp_h: usize,
    /// Exact γ_sp(G □ H); `None` means the report holds bounds only.
    pub gamma_sp_product: Option<usize>,
    pub bounds_only: bool,
    #[serde(skip)]
    pub certificate: Option<SuperDomCertificate>,
    pub entries: Vec<BoundEntry>,
}

impl CartesianReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.violated())
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn exact(g: &Graph, config: &SolverConfig, what: &str) -> Result<usize> {
    let outcome = gamma_sp_bnb(g, config)?;
    outcome
        .value()
        .ok_or_else(|| Error::NotApplicable(format!("γ_sp({what}) search stopped early")))
}

/// λ of a factor, or `None` when enumeration exceeds its cap.
fn lambda_of(g: &Graph, config: &SolverConfig) -> Result<Option<usize>> {
    match lambda(g, config) {
        Ok((v, _)) => Ok(Some(v)),
        Err(Error::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn universal_of(g: &Graph, config: &SolverConfig) -> Result<bool> {
    match universal_hypothesis(g, config) {
        Ok(v) => Ok(v),
        Err(Error::TooLarge { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Upper bounds are `γ_sp(G□H) ≤ rhs`, lower bounds `lhs ≤ γ_sp(G□H)`.
enum Side {
    Lower(i64),
    Upper(i64),
}

fn entry(name: &'static str, statement: &'static str, applicable: bool, side: Side, product: Option<usize>) -> BoundEntry {
    if !applicable {
        return BoundEntry::not_applicable(name, statement, Relation::Le);
    }
    let p = product.map(|v| v as i64);
    match (side, p) {
        (Side::Lower(b), Some(p)) => BoundEntry::le(name, statement, b, p),
        (Side::Upper(b), Some(p)) => BoundEntry::le(name, statement, p, b),
        (Side::Lower(b), None) => BoundEntry::partial(name, statement, Some(b), None),
        (Side::Upper(b), None) => BoundEntry::partial(name, statement, None, Some(b)),
    }
}

/// Evaluates the product bounds for `G □ H` against its exact value when the
/// product fits the solver, and as a bounds-only report otherwise.
pub fn check_cartesian_bounds(g: &Graph, h: &Graph, config: &SolverConfig) -> Result<CartesianReport> {
    let (n, m) = (g.order(), h.order());
    if n < 2 || m < 2 {
        return Err(Error::NotApplicable(format!(
            "product bounds need both factors of order ≥ 2, got {n} and {m}"
        )));
    }
    let sg = exact(g, config, "G")?;
    let sh = exact(h, config, "H")?;
    let (product_value, certificate) = if n * m <= SOLVER_MAX_N {
        let outcome = gamma_sp_bnb(&cartesian_product(g, h), config)?;
        match outcome.value() {
            Some(v) => (Some(v), Some(outcome.certificate)),
            None => (None, None),
        }
    } else {
        (None, None)
    };
    let (ni, mi, sgi, shi) = (n as i64, m as i64, sg as i64, sh as i64);
    let mut entries = vec![entry(
        "product_order_floor",
        "⌈nn′/2⌉ ≤ γ_sp(G□H)",
        true,
        Side::Lower((n * m).div_ceil(2) as i64),
        product_value,
    )];
    for (swapped, a, sa, sb, nb) in [(false, g, sgi, shi, mi), (true, h, shi, sgi, ni)] {
        let lam = lambda_of(a, config)?;
        let (name, statement) = if swapped {
            ("lambda_upper_swapped", "γ_sp(G□H) ≤ nγ_sp(H) − λ(H)(n − γ_sp(G))")
        } else {
            ("lambda_upper", "γ_sp(G□H) ≤ n′γ_sp(G) − λ(G)(n′ − γ_sp(H))")
        };
        entries.push(entry(
            name,
            statement,
            lam.is_some(),
            Side::Upper(nb * sa - lam.unwrap_or(0) as i64 * (nb - sb)),
            product_value,
        ));
        let (name, statement) = if swapped {
            ("degree_one_upper_swapped", "γ_sp(G□H) ≤ nγ_sp(H) − I(H)(n − γ_sp(G)) (universal vertex outside S̄ ∪ S*)")
        } else {
            ("degree_one_upper", "γ_sp(G□H) ≤ n′γ_sp(G) − I(G)(n′ − γ_sp(H)) (universal vertex outside S̄ ∪ S*)")
        };
        let hypothesis = universal_of(a, config)?;
        entries.push(entry(
            name,
            statement,
            hypothesis,
            Side::Upper(nb * sa - a.degree_one_count() as i64 * (nb - sb)),
            product_value,
        ));
    }
    entries.push(entry(
        "product_min_upper",
        "γ_sp(G□H) ≤ min{n′γ_sp(G), nγ_sp(H)}",
        true,
        Side::Upper((mi * sgi).min(ni * shi)),
        product_value,
    ));
    entries.push(entry(
        "product_order_upper",
        "γ_sp(G□H) ≤ nn′ − n − n′ + 4 (both factors have edges)",
        !g.is_empty() && !h.is_empty(),
        Side::Upper(ni * mi - ni - mi + 4),
        product_value,
    ));
    let both_bipartite = g.is_bipartite() && h.is_bipartite();
    let bip = if both_bipartite {
        let (ag, ah) = (independence_number(g)?.0 as i64, independence_number(h)?.0 as i64);
        let (bg, bh) = (vertex_cover_number(g)?.0 as i64, vertex_cover_number(h)?.0 as i64);
        ag * ah + bg.min(bh)
    } else {
        0
    };
    entries.push(entry(
        "bipartite_product_floor",
        "α(G)α(H) + min{β(G), β(H)} ≤ γ_sp(G□H) (both bipartite)",
        both_bipartite,
        Side::Lower(bip),
        product_value,
    ));
    let half = 2 * sg == n || 2 * sh == m;
    let half_name = "half_order_product";
    let half_statement = "γ_sp(G) = n/2 or γ_sp(H) = n′/2 ⇒ γ_sp(G□H) = nn′/2";
    entries.push(match (half, product_value) {
        (false, _) => BoundEntry::not_applicable(half_name, half_statement, Relation::Eq),
        (true, Some(p)) => BoundEntry::eq(half_name, half_statement, p as i64, ni * mi / 2),
        (true, None) => BoundEntry {
            relation: Relation::Eq,
            ..BoundEntry::partial(half_name, half_statement, None, Some(ni * mi / 2))
        },
    });
    entries.push(entry(
        "vizing_like",
        "γ_sp(G)γ_sp(H) ≤ γ_sp(G□H) (open conjecture)",
        true,
        Side::Lower(sgi * shi),
        product_value,
    ));
    Ok(CartesianReport {
        n,
        n_prime: m,
        gamma_sp_g: sg,
        gamma_sp_h: sh,
        gamma_sp_product: product_value,
        bounds_only: product_value.is_none(),
        certificate,
        entries,
    })
}
