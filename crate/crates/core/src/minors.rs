//! The invariant `h(G)`, the Hadwiger number `η(G)`, and their certificates.
//!
//! An h-sequence is `v1, v2, H3, H4, ...`: an adjacent pair followed by
//! disjoint connected sets, each with at least one edge to every earlier
//! member. Joining is symmetric, so a valid sequence is a clique-minor model
//! whose first two branch sets are single vertices, and `ω ≤ h ≤ η`.
//!
//! Both exact searches rely on the same reduction. A vertex outside every
//! part that is adjacent to a tail part can be absorbed into that part
//! without breaking any condition, so a maximum model can be assumed to
//! cover whole components: for `η` a component of `G`, for `h` a component
//! of `G - {v1, v2}`. The search then runs over set partitions of that
//! component into connected, pairwise joined parts.

use std::fmt;

use serde::Serialize;

use crate::error::MinorError;
use crate::graph::{bit, Graph, VertexSet};
use crate::invariants::maximum_clique;

/// Largest graph the exact searches accept.
pub const EXACT_SEARCH_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HSequence {
    /// One vertex, or an adjacent pair.
    pub head: Vec<usize>,
    pub tail: Vec<VertexSet>,
}

impl HSequence {
    pub fn single(v: usize) -> Self {
        HSequence {
            head: vec![v],
            tail: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.head.len() + self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty()
    }

    /// Head vertices as singletons, then the tail.
    pub fn parts(&self) -> Vec<VertexSet> {
        self.head
            .iter()
            .map(|&v| VertexSet::singleton(v))
            .chain(self.tail.iter().copied())
            .collect()
    }
}

/// First clause of the h-sequence definition that a candidate breaks.
/// Part indices count head vertices first, from zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SequenceViolation {
    EmptyHead,
    HeadTooLong {
        len: usize,
    },
    OutOfRange {
        vertex: usize,
    },
    HeadNotAdjacent {
        u: usize,
        v: usize,
    },
    /// A single head vertex certifies length 1 only.
    SingleHeadWithTail,
    EmptyPart {
        part: usize,
    },
    Overlap {
        part: usize,
        earlier: usize,
    },
    Disconnected {
        part: usize,
    },
    NotJoined {
        part: usize,
        earlier: usize,
    },
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceViolation::EmptyHead => write!(f, "empty head"),
            SequenceViolation::HeadTooLong { len } => write!(f, "head has {len} vertices"),
            SequenceViolation::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            SequenceViolation::HeadNotAdjacent { u, v } => {
                write!(f, "head vertices {u} and {v} are not adjacent")
            }
            SequenceViolation::SingleHeadWithTail => write!(f, "single head vertex with a tail"),
            SequenceViolation::EmptyPart { part } => write!(f, "part {part} is empty"),
            SequenceViolation::Overlap { part, earlier } => {
                write!(f, "part {part} overlaps part {earlier}")
            }
            SequenceViolation::Disconnected { part } => write!(f, "part {part} is not connected"),
            SequenceViolation::NotJoined { part, earlier } => {
                write!(f, "part {part} has no edge to part {earlier}")
            }
        }
    }
}

/// Checks every clause of the h-sequence definition, in order.
pub fn check_h_sequence(g: &Graph, seq: &HSequence) -> Result<(), SequenceViolation> {
    match seq.head.len() {
        0 => return Err(SequenceViolation::EmptyHead),
        1 | 2 => {}
        len => return Err(SequenceViolation::HeadTooLong { len }),
    }
    let parts = seq.parts();
    for p in &parts {
        if let Some(vertex) = (*p - g.vertices()).first() {
            return Err(SequenceViolation::OutOfRange { vertex });
        }
    }
    if seq.head.len() == 1 && !seq.tail.is_empty() {
        return Err(SequenceViolation::SingleHeadWithTail);
    }
    if let [u, v] = seq.head[..] {
        if u == v {
            return Err(SequenceViolation::Overlap {
                part: 1,
                earlier: 0,
            });
        }
        if !g.has_edge(u, v) {
            return Err(SequenceViolation::HeadNotAdjacent { u, v });
        }
    }
    for (i, &p) in parts.iter().enumerate().skip(seq.head.len()) {
        if p.is_empty() {
            return Err(SequenceViolation::EmptyPart { part: i });
        }
        if let Some(j) = parts[..i].iter().position(|q| q.intersects(p)) {
            return Err(SequenceViolation::Overlap {
                part: i,
                earlier: j,
            });
        }
        if !g.is_connected_set(p) {
            return Err(SequenceViolation::Disconnected { part: i });
        }
        let reach = g.neighbors_of_set(p);
        if let Some(j) = parts[..i].iter().position(|q| !q.intersects(reach)) {
            return Err(SequenceViolation::NotJoined {
                part: i,
                earlier: j,
            });
        }
    }
    Ok(())
}

pub fn verify_h_sequence(g: &Graph, seq: &HSequence) -> bool {
    check_h_sequence(g, seq).is_ok()
}

/// Branch sets of a clique minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    /// Disjoint, nonempty, connected, pairwise joined, inside `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let sets = &self.branch_sets;
        sets.iter().enumerate().all(|(i, &b)| {
            !b.is_empty()
                && b.is_subset(g.vertices())
                && g.is_connected_set(b)
                && sets[..i]
                    .iter()
                    .all(|&c| !c.intersects(b) && g.neighbors_of_set(b).intersects(c))
        })
    }
}

fn check_cap(g: &Graph) -> Result<(), MinorError> {
    if g.order() > EXACT_SEARCH_CAP {
        Err(MinorError::TooLarge {
            n: g.order(),
            cap: EXACT_SEARCH_CAP,
        })
    } else {
        Ok(())
    }
}

/// Largest `k` with `k(k-1)/2 <= m`.
fn edge_bound(m: usize) -> usize {
    let mut k = 0;
    while (k + 1) * k / 2 <= m {
        k += 1;
    }
    k
}

/// Partition search over one vertex pool. Finds a partition into strictly
/// more than `best` parts, each connected, pairwise joined and touching
/// every set in `anchors`.
struct PartitionSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    anchors: &'a [VertexSet],
    best: usize,
    witness: Option<Vec<VertexSet>>,
    parts: Vec<u64>,
}

impl<'a> PartitionSearch<'a> {
    fn run(
        g: &'a Graph,
        pool: VertexSet,
        anchors: &'a [VertexSet],
        best: usize,
    ) -> Option<Vec<VertexSet>> {
        let mut s = PartitionSearch {
            g,
            order: pool.to_vec(),
            anchors,
            best,
            witness: None,
            parts: Vec::with_capacity(pool.len()),
        };
        s.assign(0);
        s.witness
    }

    fn assign(&mut self, i: usize) {
        if self.parts.len() + (self.order.len() - i) <= self.best {
            return;
        }
        if i == self.order.len() {
            if self.valid() {
                self.best = self.parts.len();
                self.witness = Some(
                    self.parts
                        .iter()
                        .map(|&p| VertexSet::from_bits(p))
                        .collect(),
                );
            }
            return;
        }
        let v = bit(self.order[i]);
        self.parts.push(v);
        self.assign(i + 1);
        self.parts.pop();
        for j in 0..self.parts.len() {
            self.parts[j] |= v;
            self.assign(i + 1);
            self.parts[j] &= !v;
        }
    }

    fn valid(&self) -> bool {
        let g = self.g;
        let reach: Vec<VertexSet> = self
            .parts
            .iter()
            .map(|&p| g.neighbors_of_set(VertexSet::from_bits(p)))
            .collect();
        self.parts.iter().enumerate().all(|(i, &p)| {
            let p = VertexSet::from_bits(p);
            self.anchors.iter().all(|&a| reach[i].intersects(a))
                && self.parts[..i]
                    .iter()
                    .all(|&q| reach[i].intersects(VertexSet::from_bits(q)))
                && g.is_connected_set(p)
        })
    }
}

/// Exact `h(G)` with a witness attaining it.
///
/// Conventions: `h = 0` for the empty graph, `1` for a nonempty edgeless
/// graph, and the maximum over components otherwise. The witness is the
/// first maximum met when scanning head pairs in lexicographic order; a
/// maximum clique is tried first.
pub fn h_number(g: &Graph) -> Result<(usize, HSequence), MinorError> {
    check_cap(g)?;
    if g.order() == 0 {
        return Ok((
            0,
            HSequence {
                head: vec![],
                tail: vec![],
            },
        ));
    }
    let clique = maximum_clique(g).to_vec();
    if clique.len() < 2 {
        return Ok((1, HSequence::single(0)));
    }
    let mut best = HSequence {
        head: clique[..2].to_vec(),
        tail: clique[2..]
            .iter()
            .map(|&v| VertexSet::singleton(v))
            .collect(),
    };
    let upper = g
        .components()
        .parts()
        .iter()
        .map(|&c| {
            let (sub, _) = g.induced_unchecked(c);
            edge_bound(sub.edge_count()).min(c.len())
        })
        .max()
        .unwrap_or(0);

    'pairs: for (v1, v2) in g.edges() {
        if best.len() >= upper {
            break 'pairs;
        }
        let anchors = [VertexSet::singleton(v1), VertexSet::singleton(v2)];
        let rest = g.vertices().without(v1).without(v2);
        for comp in g.components_within(rest) {
            let cap = (g.adj(v1) & comp).len().min((g.adj(v2) & comp).len());
            if 2 + cap <= best.len() {
                continue;
            }
            if let Some(tail) = PartitionSearch::run(g, comp, &anchors, best.len() - 2) {
                best = HSequence {
                    head: vec![v1, v2],
                    tail,
                };
            }
        }
    }
    debug_assert!(verify_h_sequence(g, &best));
    Ok((best.len(), best))
}

/// Exact Hadwiger number with a minor model attaining it.
pub fn hadwiger_number(g: &Graph) -> Result<(usize, MinorModel), MinorError> {
    check_cap(g)?;
    let mut best: Vec<VertexSet> = maximum_clique(g).iter().map(VertexSet::singleton).collect();
    for comp in g.components().into_parts() {
        let (sub, _) = g.induced_unchecked(comp);
        if edge_bound(sub.edge_count()).min(comp.len()) <= best.len() {
            continue;
        }
        if let Some(parts) = PartitionSearch::run(g, comp, &[], best.len()) {
            best = parts;
        }
    }
    let model = MinorModel { branch_sets: best };
    debug_assert!(model.is_valid_in(g));
    Ok((model.order(), model))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn verify_examples() {
        let c5 = cycle(5);
        let ok = HSequence {
            head: vec![0, 1],
            tail: vec![set(&[2, 3, 4])],
        };
        assert_eq!(check_h_sequence(&c5, &ok), Ok(()));

        let c6 = cycle(6);
        let bad = HSequence {
            head: vec![0, 1],
            tail: vec![set(&[3, 4])],
        };
        assert_eq!(
            check_h_sequence(&c6, &bad),
            Err(SequenceViolation::NotJoined {
                part: 2,
                earlier: 0
            })
        );
        assert!(verify_h_sequence(&c6, &HSequence::single(4)));
    }

    #[test]
    fn verify_rejections() {
        let c6 = cycle(6);
        let seq = |head: Vec<usize>, tail: Vec<VertexSet>| HSequence { head, tail };
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![], vec![])),
            Err(SequenceViolation::EmptyHead)
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0, 2], vec![])),
            Err(SequenceViolation::HeadNotAdjacent { u: 0, v: 2 })
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0, 1], vec![set(&[2, 4])])),
            Err(SequenceViolation::Disconnected { part: 2 })
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0, 1], vec![set(&[1, 2])])),
            Err(SequenceViolation::Overlap {
                part: 2,
                earlier: 1
            })
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0, 1], vec![VertexSet::EMPTY])),
            Err(SequenceViolation::EmptyPart { part: 2 })
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0], vec![set(&[1])])),
            Err(SequenceViolation::SingleHeadWithTail)
        );
        assert_eq!(
            check_h_sequence(&c6, &seq(vec![0, 9], vec![])),
            Err(SequenceViolation::OutOfRange { vertex: 9 })
        );
    }

    #[test]
    fn h_spot_values() {
        assert_eq!(h_number(&Graph::complete(4).unwrap()).unwrap().0, 4);
        let (h, w) = h_number(&cycle(5)).unwrap();
        assert_eq!(h, 3);
        assert!(verify_h_sequence(&cycle(5), &w));
        assert_eq!(h_number(&cycle(6)).unwrap().0, 3);
        assert_eq!(h_number(&Graph::empty(0).unwrap()).unwrap().0, 0);
        assert_eq!(
            h_number(&Graph::empty(3).unwrap()).unwrap(),
            (1, HSequence::single(0))
        );
        // disconnected: triangle plus K4
        let g = Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        assert_eq!(h_number(&g).unwrap().0, 4);
    }

    #[test]
    fn eta_spot_values() {
        for n in 1..=6 {
            let (eta, model) = hadwiger_number(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!(eta, n);
            assert!(model.is_valid_in(&Graph::complete(n).unwrap()));
        }
        assert_eq!(hadwiger_number(&cycle(5)).unwrap().0, 3);
        assert_eq!(hadwiger_number(&Graph::empty(0).unwrap()).unwrap().0, 0);
        assert_eq!(hadwiger_number(&Graph::empty(2).unwrap()).unwrap().0, 1);
    }

    #[test]
    fn petersen_hadwiger_number() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let p = Graph::from_edge_list(10, &e).unwrap();
        let (eta, model) = hadwiger_number(&p).unwrap();
        assert!(model.is_valid_in(&p));
        // K6 needs 15 edges among 6 branch sets; 10 vertices in 6 connected
        // sets use at least 4 internal edges, leaving at most 11
        assert_eq!(edge_bound(p.edge_count() - (p.order() - 6)), 5);
        assert_eq!(eta, 5);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(13).unwrap();
        assert_eq!(
            h_number(&g),
            Err(MinorError::TooLarge {
                n: 13,
                cap: EXACT_SEARCH_CAP
            })
        );
        assert!(hadwiger_number(&g).is_err());
    }
}
