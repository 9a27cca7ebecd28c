use serde::Serialize;

use super::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    Singleton,
    /// Members share open neighborhoods (pairwise non-adjacent).
    FalseTwin,
    /// Members share closed neighborhoods (pairwise adjacent).
    TrueTwin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub members: VertexSet,
    pub kind: TwinKind,
}

/// Classes of the relation `N[x] = N[y] or N(x) = N(y)`, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    /// Number of classes, `t`.
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(v))
    }
}

fn twins(g: &Graph, x: usize, y: usize) -> bool {
    let (nx, ny) = (g.neighbors(x), g.neighbors(y));
    if nx == ny {
        return true;
    }
    // closed neighborhoods agree iff x~y and N(x)\{y} = N(y)\{x}
    nx.contains(y) && {
        let mut a = nx.clone();
        a.remove(y);
        let mut b = ny.clone();
        b.remove(x);
        a == b
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut assigned = VertexSet::new(n);
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned.contains(x) {
            continue;
        }
        let mut members = VertexSet::new(n);
        members.insert(x);
        for y in x + 1..n {
            if !assigned.contains(y) && twins(g, x, y) {
                members.insert(y);
            }
        }
        assigned.union_with(&members);
        let kind = match members.len() {
            1 => TwinKind::Singleton,
            _ => {
                let second = members.iter().nth(1).unwrap();
                if g.has_edge(x, second) {
                    TwinKind::TrueTwin
                } else {
                    TwinKind::FalseTwin
                }
            }
        };
        classes.push(TwinClass { members, kind });
    }
    TwinPartition { classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn complete_is_one_true_class() {
        let p = twin_partition(&complete(5).unwrap());
        assert_eq!(p.count(), 1);
        assert_eq!(p.classes[0].kind, TwinKind::TrueTwin);
    }

    #[test]
    fn complete_bipartite_two_false_classes() {
        let p = twin_partition(&complete_bipartite(2, 3).unwrap());
        assert_eq!(p.count(), 2);
        assert!(p.classes.iter().all(|c| c.kind == TwinKind::FalseTwin));
    }

    #[test]
    fn mixed_kinds() {
        // K_1 + (K_2 ∪ N_2): singleton center, a true pair, a false pair
        let g = join(
            &complete(1).unwrap(),
            &disjoint_union(&complete(2).unwrap(), &empty(2).unwrap()),
        );
        let p = twin_partition(&g);
        let kinds: Vec<_> = p.classes.iter().map(|c| c.kind).collect();
        assert_eq!(
            kinds,
            vec![TwinKind::Singleton, TwinKind::TrueTwin, TwinKind::FalseTwin]
        );
    }

    #[test]
    fn path_has_only_singletons_beyond_p3() {
        let p = twin_partition(&path(5).unwrap());
        assert_eq!(p.count(), 5);
        // P_3 ends are false twins
        assert_eq!(twin_partition(&path(3).unwrap()).count(), 2);
    }
}
