use serde::Serialize;

use crate::error::ConstructiveError;
use crate::graph::{Graph, VertexSet};

use super::partition::PartitionT2;
use super::{forbidden_cycle, non_simplicial_pair, AlphaBound, CaseLabel, CaseTrace, Hypotheses};

const HYPOTHESES: Hypotheses = Hypotheses {
    connected: true,
    claw_free: false,
    alpha: AlphaBound::Exactly(2),
    forbidden_cycle: 5,
};

/// An edge `vu` whose closed neighborhoods cover the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingEdge {
    pub edge: (usize, usize),
    pub trace: CaseTrace,
}

impl DominatingEdge {
    pub fn as_set(&self) -> VertexSet {
        VertexSet::from_iter([self.edge.0, self.edge.1])
    }
}

/// Dominating edge through a non-simplicial vertex `v` of a connected graph
/// with stability number 2 and no induced `C5`.
///
/// With `v1 < v2` the smallest nonadjacent pair in `N(v)`, `G' = G - N[v]`
/// is a clique covered by `N(v1) ∪ N(v2)`. If no vertex of `G'` sees `v1`
/// alone, `v v2` dominates; symmetrically for `v2`. Both sides occupied
/// would close an induced `C5 = v v1 a b v2`.
pub fn theorem1_edge(g: &Graph, v: usize) -> Result<DominatingEdge, ConstructiveError> {
    g.check_vertex(v)?;
    HYPOTHESES.check(g)?;
    let (v1, v2) = non_simplicial_pair(g, v)?;
    let p = PartitionT2::with_pair(g, v, v1, v2);

    let (u, label) = if p.gprime.is_empty() {
        let u = g
            .adj(v)
            .first()
            .expect("non-simplicial vertex has neighbors");
        (u, CaseLabel::T1GprimeEmpty)
    } else if p.only_v1.is_empty() {
        (v2, CaseLabel::T1V1Empty)
    } else if p.only_v2.is_empty() {
        (v1, CaseLabel::T1V2Empty)
    } else {
        let a = p.only_v1.first().unwrap();
        let b = (p.only_v2 & g.adj(a))
            .first()
            .or(p.only_v2.first())
            .unwrap();
        return Err(forbidden_cycle(g, vec![v, v1, a, b, v2]).unwrap_or(
            ConstructiveError::Postcondition {
                set: vec![v, v1, a, b, v2],
            },
        ));
    };

    let edge = (v, u);
    if g.closed_adj(v) | g.closed_adj(u) != g.vertices() {
        return Err(ConstructiveError::Postcondition { set: vec![v, u] });
    }
    Ok(DominatingEdge {
        edge,
        trace: CaseTrace::new(label, v, v1, v2, vec![u]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::Violation;

    #[test]
    fn path_middle_vertex() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let r = theorem1_edge(&p3, 1).unwrap();
        assert_eq!(r.edge, (1, 0));
        assert_eq!(r.trace.label, CaseLabel::T1GprimeEmpty);
    }

    #[test]
    fn four_cycle() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = theorem1_edge(&c4, 0).unwrap();
        assert_eq!(r.edge, (0, 3));
        assert_eq!(r.trace.label, CaseLabel::T1V1Empty);
        assert_eq!((r.trace.v1, r.trace.v2), (1, 3));
        // brute-force domination check
        assert!((0..4).all(|x| x == 0 || x == 3 || c4.has_edge(x, 0) || c4.has_edge(x, 3)));
    }

    #[test]
    fn five_cycle_is_excluded() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        match theorem1_edge(&c5, 0) {
            Err(ConstructiveError::Precondition(Violation::InducedCycle { length: 5, .. })) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn other_preconditions() {
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(
            theorem1_edge(&k3, 0),
            Err(ConstructiveError::Precondition(
                Violation::StabilityNumber { found: 1, .. }
            ))
        ));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            theorem1_edge(&p3, 0),
            Err(ConstructiveError::Precondition(Violation::Simplicial {
                vertex: 0
            }))
        ));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            theorem1_edge(&two, 0),
            Err(ConstructiveError::Precondition(Violation::Disconnected))
        ));
        assert!(matches!(
            theorem1_edge(&p3, 5),
            Err(ConstructiveError::Graph(_))
        ));
    }
}
