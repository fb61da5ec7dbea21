//! Every labeled graph on `n` vertices, by counting through edge bitmasks.

use stabcds::Graph;

use crate::error::HarnessError;

/// Largest order the built-in enumeration accepts (2^21 graphs at n = 7).
pub const MAX_LABELED_ORDER: usize = 7;

/// Vertex pairs in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Iterator over the labeled graphs on `n` vertices. Graph number `m` has
/// the `k`-th pair as an edge iff bit `k` of `m` is set.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn count(&self) -> u64 {
        self.end
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Graph number `m` in the enumeration order.
    pub fn nth_graph(&self, m: u64) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if m >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_adjacency(rows).expect("enumerated rows are symmetric")
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.nth_graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs, HarnessError> {
    if n > MAX_LABELED_ORDER {
        return Err(HarnessError::EnumerationTooLarge {
            n,
            max: MAX_LABELED_ORDER,
        });
    }
    let pairs = pairs(n);
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled(7).unwrap().count(), 2_097_152);
        assert!(matches!(
            enumerate_labeled(8),
            Err(HarnessError::EnumerationTooLarge { n: 8, .. })
        ));
    }

    #[test]
    fn each_graph_once() {
        let all: Vec<_> = enumerate_labeled(4).unwrap().collect();
        assert_eq!(all.len(), 64);
        let distinct: HashSet<_> = all.iter().map(stabcds::to_graph6).collect();
        assert_eq!(distinct.len(), 64);
        assert_eq!(all[0].edge_count(), 0);
        assert_eq!(all[63], Graph::complete(4).unwrap());
    }
}
