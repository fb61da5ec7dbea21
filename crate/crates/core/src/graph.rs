//! Bitmask graphs on at most 64 vertices.
//!
//! Vertices are the dense integers `0..n`. Each adjacency row is a single
//! `u64`, so neighborhood algebra is a handful of word operations.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Hard upper bound on the number of vertices.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices stored as a bitmask.
///
/// Iteration is always in increasing vertex order. Serialized as a sorted
/// list of vertex indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v >= 63 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & !low_bits(v + 1))
        }
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; intersect with a vertex
/// range before use.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

/// Simple undirected graph with bitmask adjacency rows.
///
/// Invariants: rows are symmetric, irreflexive and confined to `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = low_bits(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let range = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !range != 0 {
                let stray = (row & !range).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: stray, n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop { vertex: v });
            }
            for u in VertexSet(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows are trusted; callers guarantee the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood without a range check. Panics if `v >= n`.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood without a range check. Panics if `v >= n`.
    #[inline]
    pub fn closed_adj(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj(v))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed_adj(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj(u).above(u).iter().map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match (s - self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Union of the open neighborhoods of the members of `s`.
    #[inline]
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj(v))
    }

    /// Union of the closed neighborhoods of the members of `s`.
    #[inline]
    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        self.neighbors_of_set(s) | s
    }

    /// Vertices reachable from `start` inside `within` (`start` must be in `within`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighbors_of_set(frontier) & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `G[s]` is connected. The empty set is not connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.reach(v, s) == s,
        }
    }

    /// Whether the whole graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.vertices())
    }

    /// Whether every pair of members of `s` is adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.closed_adj(v)).is_empty())
    }

    /// Whether no two members of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj(v).intersects(s))
    }

    /// Connected components, ordered by smallest contained vertex.
    pub fn components(&self) -> VertexPartition {
        VertexPartition {
            parts: self.components_within(self.vertices()),
        }
    }

    /// Components of `G[s]`, ordered by smallest contained vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut parts = Vec::new();
        while let Some(v) = rest.first() {
            let part = self.reach(v, rest);
            parts.push(part);
            rest = rest - part;
        }
        parts
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// original order. The returned map sends new indices to original ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut rows = vec![0u64; map.len()];
        for (i, &v) in map.iter().enumerate() {
            rows[i] = compress(self.adj[v] & s.0, s.0);
        }
        (Graph::from_rows_unchecked(rows), map)
    }

    /// `G - s`.
    pub fn remove(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(self.vertices() - s))
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let rows = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Translates a set of original vertices through an induced-subgraph map.
    pub fn lift(map: &[usize], s: VertexSet) -> VertexSet {
        s.iter().map(|i| map[i]).collect()
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits, keeping order.
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if row & low != 0 {
            out |= 1 << i;
        }
        i += 1;
        m ^= low;
    }
    out
}

/// Disjoint nonempty vertex sets covering the whole graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    parts: Vec<VertexSet>,
}

impl VertexPartition {
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// Largest part; ties go to the part with the smallest vertex.
    pub fn largest(&self) -> Option<VertexSet> {
        self.parts
            .iter()
            .copied()
            .fold(None, |best: Option<VertexSet>, p| match best {
                Some(b) if b.len() >= p.len() => Some(b),
                _ => Some(p),
            })
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }
}
