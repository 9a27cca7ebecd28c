use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};

/// A super dominating set `D` together with its private-neighbor witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperDomCertificate {
    pub set: VertexSet,
    /// `D*`: the witnesses used, one per vertex outside `D`.
    pub witnesses: VertexSet,
    /// `(u, u*)` pairs sorted by `u`, with `N(u*) ∩ D̄ = {u}`.
    pub assignment: Vec<(usize, usize)>,
}

impl SuperDomCertificate {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn outside(&self) -> VertexSet {
        self.set.complement()
    }

    /// Re-checks the certificate against `g` without trusting any field.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.set.universe() != g.order() || self.witnesses.universe() != g.order() {
            return false;
        }
        let outside = self.outside();
        let mut seen_u = VertexSet::new(g.order());
        let mut seen_w = VertexSet::new(g.order());
        for &(u, w) in &self.assignment {
            if !outside.contains(u) || !self.set.contains(w) {
                return false;
            }
            if !seen_u.insert(u) || !seen_w.insert(w) {
                return false;
            }
            let hit = g.neighbors(w).intersection(&outside);
            if hit.len() != 1 || !hit.contains(u) {
                return false;
            }
        }
        seen_u == outside && seen_w == self.witnesses
    }
}

/// Checks `N(v) ∩ D̄ = {u}` for every `u ∉ D`, taking the smallest valid `v`.
///
/// A valid `v` has exactly one neighbor outside `D`, so it can never serve
/// two different vertices: the per-vertex choices always form a bijection
/// onto `D*` and no matching search is needed.
pub fn is_super_dominating(g: &Graph, d: &VertexSet) -> Option<SuperDomCertificate> {
    let n = g.order();
    if d.universe() != n {
        return None;
    }
    let outside = d.complement();
    let mut witnesses = VertexSet::new(n);
    let mut assignment = Vec::with_capacity(outside.len());
    for u in &outside {
        let w = g
            .neighbors(u)
            .iter()
            .filter(|&v| d.contains(v))
            .find(|&v| g.neighbors(v).intersection_len(&outside) == 1)?;
        witnesses.insert(w);
        assignment.push((u, w));
    }
    Some(SuperDomCertificate {
        set: d.clone(),
        witnesses,
        assignment,
    })
}

/// Result of an exact or time-limited γ_sp computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperDomOutcome {
    pub lower: usize,
    pub upper: usize,
    /// Certificate for `upper`.
    pub certificate: SuperDomCertificate,
    pub exact: bool,
}

impl SuperDomOutcome {
    /// The exact value, or `None` when only an interval is known.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

struct Assignment<'a>(&'a [(usize, usize)]);

impl Serialize for Assignment<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (u, w) in self.0 {
            map.serialize_entry(&u.to_string(), w)?;
        }
        map.end()
    }
}

impl Serialize for SuperDomCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SuperDomCertificate", 3)?;
        st.serialize_field("D", &self.set)?;
        st.serialize_field("Dstar", &self.witnesses)?;
        st.serialize_field("assignment", &Assignment(&self.assignment))?;
        st.end()
    }
}

impl Serialize for SuperDomOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SuperDomOutcome", 6)?;
        st.serialize_field("gamma_sp", &self.value())?;
        st.serialize_field("D", &self.certificate.set)?;
        st.serialize_field("Dstar", &self.certificate.witnesses)?;
        st.serialize_field("assignment", &Assignment(&self.certificate.assignment))?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("bounds", &[self.lower, self.upper])?;
        st.end()
    }
}
