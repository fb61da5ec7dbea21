use serde::Serialize;

use crate::error::ConstructiveError;
use crate::graph::{Graph, VertexSet};

use super::non_simplicial_pair;

/// Split of `G' = G - N[v]` by adjacency to two nonadjacent neighbors
/// `v1`, `v2` of `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionT2 {
    pub v: usize,
    pub v1: usize,
    pub v2: usize,
    /// Vertex set of `G'`.
    pub gprime: VertexSet,
    /// Adjacent to `v1`, not to `v2`.
    #[serde(rename = "V1")]
    pub only_v1: VertexSet,
    /// Adjacent to `v2`, not to `v1`.
    #[serde(rename = "V2")]
    pub only_v2: VertexSet,
    /// Adjacent to both.
    #[serde(rename = "V12")]
    pub both: VertexSet,
    /// Adjacent to neither.
    #[serde(rename = "VP12")]
    pub neither: VertexSet,
}

impl PartitionT2 {
    pub(crate) fn with_pair(g: &Graph, v: usize, v1: usize, v2: usize) -> Self {
        let gprime = g.vertices() - g.closed_adj(v);
        let n1 = g.adj(v1) & gprime;
        let n2 = g.adj(v2) & gprime;
        PartitionT2 {
            v,
            v1,
            v2,
            gprime,
            only_v1: n1 - n2,
            only_v2: n2 - n1,
            both: n1 & n2,
            neither: gprime - n1 - n2,
        }
    }

    /// `V1 ∪ V2 ∪ V12`.
    pub fn touched(&self) -> VertexSet {
        self.only_v1 | self.only_v2 | self.both
    }

    /// Re-derives every defining property from `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let parts = [self.only_v1, self.only_v2, self.both, self.neither];
        let disjoint = (0..4).all(|i| (i + 1..4).all(|j| !parts[i].intersects(parts[j])));
        let union = parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p);
        g.has_edge(self.v, self.v1)
            && g.has_edge(self.v, self.v2)
            && !g.has_edge(self.v1, self.v2)
            && self.gprime == g.vertices() - g.closed_adj(self.v)
            && disjoint
            && union == self.gprime
            && self
                .only_v1
                .iter()
                .all(|x| g.has_edge(x, self.v1) && !g.has_edge(x, self.v2))
            && self
                .only_v2
                .iter()
                .all(|x| g.has_edge(x, self.v2) && !g.has_edge(x, self.v1))
            && self
                .both
                .iter()
                .all(|x| g.has_edge(x, self.v1) && g.has_edge(x, self.v2))
            && self
                .neither
                .iter()
                .all(|x| !g.has_edge(x, self.v1) && !g.has_edge(x, self.v2))
    }
}

/// Computes the split for the smallest nonadjacent neighbor pair of `v`.
/// `V'12` is taken inside `G'`.
pub fn partition_t2(g: &Graph, v: usize) -> Result<PartitionT2, ConstructiveError> {
    let (v1, v2) = non_simplicial_pair(g, v)?;
    Ok(PartitionT2::with_pair(g, v, v1, v2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::Violation;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn six_cycle() {
        let c6 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let p = partition_t2(&c6, 0).unwrap();
        assert_eq!((p.v1, p.v2), (1, 5));
        assert_eq!(p.gprime, set(&[2, 3, 4]));
        assert_eq!(p.only_v1, set(&[2]));
        assert_eq!(p.only_v2, set(&[4]));
        assert_eq!(p.both, VertexSet::EMPTY);
        assert_eq!(p.neither, set(&[3]));
        assert!(p.is_valid_in(&c6));
    }

    #[test]
    fn net_graph() {
        // t0=0, p0=1, t1=2, p1=3, t2=4, p2=5
        let net =
            Graph::from_edge_list(6, &[(0, 2), (2, 4), (0, 4), (0, 1), (2, 3), (4, 5)]).unwrap();
        let p = partition_t2(&net, 0).unwrap();
        assert_eq!((p.v1, p.v2), (1, 2));
        assert_eq!(p.gprime, set(&[3, 5]));
        assert_eq!(p.only_v2, set(&[3]));
        assert_eq!(p.neither, set(&[5]));
        assert!(p.only_v1.is_empty() && p.both.is_empty());
        assert!(p.is_valid_in(&net));
    }

    #[test]
    fn simplicial_vertex_rejected() {
        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(
                partition_t2(&k4, v),
                Err(ConstructiveError::Precondition(Violation::Simplicial {
                    vertex: v
                }))
            );
        }
    }
}
