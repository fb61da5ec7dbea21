//! Exact structural invariants: stability and clique numbers, simplicial
//! vertices, claws, induced cycles and connected domination.
//!
//! Every search scans vertices in increasing order and returns the first
//! witness it meets, so results are reproducible.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{GraphError, InvariantError};
use crate::graph::{Graph, VertexSet};

/// A claw `K_{1,3}`: a center with three pairwise nonadjacent neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Claw {
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_iter([self.center, self.leaves[0], self.leaves[1], self.leaves[2]])
    }

    pub fn to_vec(&self) -> Vec<usize> {
        vec![self.center, self.leaves[0], self.leaves[1], self.leaves[2]]
    }

    /// Re-checks the claw shape in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        let in_range = self.to_vec().iter().all(|&x| x < g.order());
        in_range
            && [a, b, c].iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

/// Maximum clique inside `cand`, by include/exclude branching with a greedy
/// coloring bound.
fn max_clique_within(g: &Graph, cand: VertexSet) -> VertexSet {
    fn color_bound(g: &Graph, p: VertexSet) -> usize {
        let mut uncolored = p;
        let mut colors = 0;
        while !uncolored.is_empty() {
            colors += 1;
            let mut avail = uncolored;
            while let Some(v) = avail.first() {
                uncolored.remove(v);
                avail = avail.without(v) - g.adj(v);
            }
        }
        colors
    }

    fn expand(g: &Graph, chosen: VertexSet, p: VertexSet, best: &mut VertexSet) {
        let Some(v) = p.first() else {
            if chosen.len() > best.len() {
                *best = chosen;
            }
            return;
        };
        let bound = if p.len() > 6 {
            color_bound(g, p)
        } else {
            p.len()
        };
        if chosen.len() + bound <= best.len() {
            return;
        }
        expand(g, chosen.with(v), p & g.adj(v), best);
        expand(g, chosen, p.without(v), best);
    }

    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, cand, &mut best);
    best
}

pub fn maximum_clique(g: &Graph) -> VertexSet {
    max_clique_within(g, g.vertices())
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_clique(&g.complement())
}

/// `α(G)`; zero for the empty graph.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// Unchecked variant used in hot loops. Panics if `v` is out of range.
#[inline]
pub fn is_simplicial_unchecked(g: &Graph, v: usize) -> bool {
    let nb = g.adj(v);
    nb.iter().all(|u| (nb - g.closed_adj(u)).is_empty())
}

/// Whether `G[N(v)]` is complete (vacuously true for degree at most 1).
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool, GraphError> {
    g.check_vertex(v)?;
    Ok(is_simplicial_unchecked(g, v))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.order())
        .filter(|&v| is_simplicial_unchecked(g, v))
        .collect()
}

/// The lexicographically smallest pair `u < w` of nonadjacent neighbors of `v`.
pub fn nonadjacent_neighbor_pair(g: &Graph, v: usize) -> Option<(usize, usize)> {
    let nb = g.adj(v);
    nb.iter()
        .find_map(|u| (nb.above(u) - g.adj(u)).first().map(|w| (u, w)))
}

/// Smallest claw in the order (center, sorted leaves), if any.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for center in 0..g.order() {
        let nb = g.adj(center);
        for a in nb {
            let rest = nb.above(a) - g.adj(a);
            for b in rest {
                if let Some(c) = (rest.above(b) - g.adj(b)).first() {
                    return Some(Claw {
                        center,
                        leaves: [a, b, c],
                    });
                }
            }
        }
    }
    None
}

/// Finds an induced (chordless) cycle on exactly `k` vertices.
///
/// The witness starts at its smallest vertex `c_1`; among cycles with the
/// same start, the induced path `c_1 c_2 ... c_k` is searched in increasing
/// vertex order with `c_2 < c_k`.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, InvariantError> {
    if k < 4 {
        return Err(InvariantError::CycleTooShort { k });
    }
    if k > g.order() {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        let allowed = g.vertices().above(s);
        if extend_cycle(g, k, &mut path, allowed, VertexSet::EMPTY) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// `blocked` holds the closed neighborhoods of the interior path vertices
/// other than the current endpoint.
fn extend_cycle(
    g: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    allowed: VertexSet,
    blocked: VertexSet,
) -> bool {
    let s = path[0];
    let last = *path.last().expect("path starts nonempty");
    let i = path.len();
    let mut cand = (g.adj(last) & allowed) - blocked;
    if i == k - 1 {
        cand &= g.adj(s);
        cand = cand.above(path[1]);
    } else if i >= 2 {
        cand = cand - g.adj(s);
    }
    let next_blocked = if i >= 2 {
        blocked | g.closed_adj(last)
    } else {
        blocked
    };
    for w in cand {
        path.push(w);
        if i + 1 == k || extend_cycle(g, k, path, allowed, next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// Independent check that `cycle` is a chordless cycle of `g`.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    if VertexSet::from_iter(cycle.iter().copied()).len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Domination plus per-component connectivity, without range checks.
pub fn is_cds_unchecked(g: &Graph, d: VertexSet) -> bool {
    if g.closed_neighbors_of_set(d) != g.vertices() {
        return false;
    }
    if g.is_connected() {
        return g.order() == 0 || g.is_connected_set(d);
    }
    g.components()
        .parts()
        .iter()
        .all(|&c| g.is_connected_set(d & c))
}

/// Whether `d` is a connected dominating set: every vertex is in `d` or has
/// a neighbor in it, and `d` meets every component in a connected set.
pub fn is_cds(g: &Graph, d: VertexSet) -> Result<bool, GraphError> {
    g.check_set(d)?;
    Ok(is_cds_unchecked(g, d))
}

/// All `k`-subsets of `pool`, in lexicographic order of sorted vertex lists.
pub fn subsets_of_size(pool: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    pool.iter()
        .combinations(k)
        .map(|c| c.into_iter().collect::<VertexSet>())
}

/// Smallest CDS of a connected graph restricted to the component `c`.
fn min_cds_in_component(g: &Graph, c: VertexSet) -> VertexSet {
    for size in 1..=c.len() {
        if let Some(d) = subsets_of_size(c, size)
            .find(|&d| g.closed_neighbors_of_set(d) & c == c && g.is_connected_set(d))
        {
            return d;
        }
    }
    VertexSet::EMPTY
}

/// A minimum connected dominating set; for disconnected graphs, the union of
/// per-component minima. Lexicographically smallest among the minima.
pub fn min_cds(g: &Graph) -> VertexSet {
    g.components()
        .parts()
        .iter()
        .fold(VertexSet::EMPTY, |acc, &c| acc | min_cds_in_component(g, c))
}

pub fn min_cds_size(g: &Graph) -> usize {
    min_cds(g).len()
}

/// Every CDS of `g` in order of increasing size, lexicographic within a size.
pub fn connected_dominating_sets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    let all = g.vertices();
    (0..=g.order())
        .flat_map(move |k| subsets_of_size(all, k))
        .filter(move |&d| is_cds_unchecked(g, d))
}

/// Hypotheses of the dominating-edge and connected-dominating-set results,
/// evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub alpha: usize,
    pub connected: bool,
    pub claw_witness: Option<Claw>,
    pub c5_witness: Option<Vec<usize>>,
    pub c7_witness: Option<Vec<usize>>,
    pub simplicial: VertexSet,
}

impl HypothesisReport {
    pub fn claw_free(&self) -> bool {
        self.claw_witness.is_none()
    }
}

pub fn hypothesis_report(g: &Graph) -> HypothesisReport {
    HypothesisReport {
        alpha: independence_number(g),
        connected: g.is_connected(),
        claw_witness: find_claw(g),
        c5_witness: find_induced_cycle(g, 5).expect("k >= 4"),
        c7_witness: find_induced_cycle(g, 7).expect("k >= 4"),
        simplicial: simplicial_vertices(g),
    }
}
