use serde::Serialize;

use super::spec::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::superdom::gamma_sp_bnb;
use crate::SolverConfig;

fn not_applicable(spec: &FamilySpec, why: &str) -> Error {
    Error::NotApplicable(format!("{spec}: {why}"))
}

/// Exact γ_sp from a proved closed form, or `NotApplicable` when the family
/// or its parameters fall outside every formula's hypothesis.
///
/// Corona products need γ_sp of the second factor; it comes from this
/// function when possible and from the exact solver otherwise.
pub fn gamma_sp_formula(spec: &FamilySpec, config: &SolverConfig) -> Result<usize> {
    use FamilySpec::*;
    let value = match spec {
        Path(n) if *n >= 3 => n.div_ceil(2),
        Cycle(n) if *n >= 3 => {
            if n % 4 == 0 || n % 4 == 3 {
                n.div_ceil(2)
            } else {
                (n + 1).div_ceil(2)
            }
        }
        Complete(n) if *n >= 2 => n - 1,
        Empty(n) if *n >= 1 => *n,
        Star(r) if *r >= 1 => *r,
        CompleteBipartite(r, t) if *r.min(t) >= 2 => r + t - 2,
        CompleteMultipartite(parts) if parts.len() >= 2 && parts.iter().all(|&a| a >= 1) => {
            let n: usize = parts.iter().sum();
            if parts.iter().filter(|&&a| a > 1).count() <= 1 {
                n - 1
            } else {
                n - 2
            }
        }
        Hypercube(k) if *k >= 1 && *k < usize::BITS as usize => 1 << (k - 1),
        Corona(g, h) => {
            let n = g.order();
            if n == 0 {
                return Err(not_applicable(spec, "first factor is empty"));
            }
            let hg = h.construct()?;
            corona_formula(n, &hg, || second_factor_gamma_sp(h, &hg, config))?
        }
        GBoxK2(g) if g.order() >= 2 => g.order(),
        KnBoxKm(n, m) if *n >= 4 && *m >= 4 => n * m - n - m + 4,
        KnBoxK3(n) if *n >= 3 => 2 * n,
        StarBoxStar(r, s) if *r >= 1 && *s >= 1 => r * s + 1,
        Cartesian(g, h) => return cartesian_formula(spec, g, h, config),
        _ => return Err(not_applicable(spec, "parameters outside the formula's hypothesis")),
    };
    Ok(value)
}

fn second_factor_gamma_sp(spec: &FamilySpec, h: &Graph, config: &SolverConfig) -> Result<usize> {
    match gamma_sp_formula(spec, config) {
        Ok(v) => Ok(v),
        Err(Error::NotApplicable(_)) => exact_solver_value(h, config),
        Err(e) => Err(e),
    }
}

fn exact_solver_value(g: &Graph, config: &SolverConfig) -> Result<usize> {
    let outcome = gamma_sp_bnb(g, config)?;
    outcome.value().ok_or_else(|| {
        Error::NotApplicable(format!(
            "solver stopped early with γ_sp in [{}, {}]",
            outcome.lower, outcome.upper
        ))
    })
}

/// γ_sp(G ⊙ H) for `G` of order `n`: `n(γ_sp(H) + 1)` when `H` has an edge,
/// `n·r` when `H` is edgeless of order `r`.
pub fn corona_formula(n: usize, h: &Graph, gamma_sp_h: impl FnOnce() -> Result<usize>) -> Result<usize> {
    if n == 0 || h.order() == 0 {
        return Err(Error::NotApplicable("corona with an empty factor".into()));
    }
    if h.is_empty() {
        Ok(n * h.order())
    } else {
        Ok(n * (gamma_sp_h()? + 1))
    }
}

fn cartesian_formula(spec: &FamilySpec, g: &FamilySpec, h: &FamilySpec, config: &SolverConfig) -> Result<usize> {
    use FamilySpec::*;
    match (g, h) {
        (Complete(n), Complete(m)) if *n >= 4 && *m >= 4 => return gamma_sp_formula(&KnBoxKm(*n, *m), config),
        (Complete(n), Complete(3)) | (Complete(3), Complete(n)) if *n >= 3 => {
            return gamma_sp_formula(&KnBoxK3(*n), config)
        }
        (Star(r), Star(s)) => return gamma_sp_formula(&StarBoxStar(*r, *s), config),
        _ => {}
    }
    let a = gamma_sp_formula(g, config).ok();
    let b = gamma_sp_formula(h, config).ok();
    if let Some(v) = half_order_value(g.order(), a, h.order(), b) {
        return Ok(v);
    }
    Err(not_applicable(spec, "no closed formula for this product"))
}

/// `nn′/2` when `n, n′ ≥ 2` and a known factor value equals half its order.
pub fn half_order_value(n: usize, gamma_sp_g: Option<usize>, n2: usize, gamma_sp_h: Option<usize>) -> Option<usize> {
    if n < 2 || n2 < 2 {
        return None;
    }
    let halves = |order: usize, v: Option<usize>| v.is_some_and(|v| 2 * v == order);
    (halves(n, gamma_sp_g) || halves(n2, gamma_sp_h)).then_some(n * n2 / 2)
}

/// [`half_order_value`] with both factor values from the exact solver.
pub fn half_order_rule(g: &Graph, h: &Graph, config: &SolverConfig) -> Result<Option<usize>> {
    if g.order() < 2 || h.order() < 2 {
        return Ok(None);
    }
    let a = exact_solver_value(g, config)?;
    let b = exact_solver_value(h, config)?;
    Ok(half_order_value(g.order(), Some(a), h.order(), Some(b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LinearFactor {
    Path,
    Cycle,
}

/// Closed integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
}

impl Interval {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lower <= v && v <= self.upper
    }
}

/// γ_sp(P_n □ H) or γ_sp(C_n □ H) for `H` of order `n′`, by the parity of `n`.
pub fn cartesian_parity_bounds(factor: LinearFactor, n: usize, h_order: usize) -> Result<Interval> {
    if n < 3 || h_order < 2 {
        return Err(Error::NotApplicable(format!(
            "parity bounds need n ≥ 3 and n′ ≥ 2, got n = {n}, n′ = {h_order}"
        )));
    }
    let lower = (n * h_order).div_ceil(2);
    let upper = match (factor, n % 4) {
        (LinearFactor::Path, r) if r % 2 == 0 => lower,
        (LinearFactor::Path, _) => (n + 1) * h_order / 2,
        (LinearFactor::Cycle, 0) => lower,
        (LinearFactor::Cycle, 2) => (n + 2) * h_order / 2,
        (LinearFactor::Cycle, _) => (n + 1) * h_order / 2,
    };
    Ok(Interval { lower, upper })
}
