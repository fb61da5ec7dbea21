use serde::Serialize;

use crate::error::ConstructiveError;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, is_cds_unchecked, subsets_of_size};
use crate::minors::HSequence;

use super::theorem2::{theorem2_cds, MAX_CDS};
use super::{AlphaBound, CaseTrace, Hypotheses};

const HYPOTHESES: Hypotheses = Hypotheses {
    connected: true,
    claw_free: false,
    alpha: AlphaBound::AtMost(3),
    forbidden_cycle: 7,
};

/// How [`corollary_cds`] obtained its set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum CorollaryBranch {
    /// The four vertices of a claw; a vertex missed by all of them would
    /// extend the leaves to an independent set of size 4.
    Claw,
    /// The claw-free construction at the smallest non-simplicial vertex.
    Theorem2 {
        trace: CaseTrace,
    },
    Complete,
    /// Stability number at most 2: `{0}` plus one connector into the clique
    /// `G - N[0]`.
    SmallStability,
}

impl CorollaryBranch {
    pub fn label(&self) -> &'static str {
        match self {
            CorollaryBranch::Claw => "COR_CLAW",
            CorollaryBranch::Theorem2 { trace } => trace.label.as_str(),
            CorollaryBranch::Complete => "COR_COMPLETE",
            CorollaryBranch::SmallStability => "COR_ALPHA_LE2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCds {
    #[serde(rename = "D")]
    pub set: VertexSet,
    #[serde(flatten)]
    pub branch: CorollaryBranch,
}

/// Connected dominating set with at most 4 vertices for a connected graph
/// with stability number at most 3 and no induced `C7`.
pub fn corollary_cds(g: &Graph) -> Result<CorollaryCds, ConstructiveError> {
    HYPOTHESES.check(g)?;
    corollary_cds_checked(g)
}

fn corollary_cds_checked(g: &Graph) -> Result<CorollaryCds, ConstructiveError> {
    let done = |set: VertexSet, branch: CorollaryBranch| {
        if is_cds_unchecked(g, set) && set.len() <= MAX_CDS {
            Ok(CorollaryCds { set, branch })
        } else {
            Err(ConstructiveError::Postcondition { set: set.to_vec() })
        }
    };

    if let Some(claw) = invariants::find_claw(g) {
        return done(claw.vertices(), CorollaryBranch::Claw);
    }
    let alpha = invariants::independence_number(g);
    if alpha == 3 {
        let v = (0..g.order())
            .find(|&v| !invariants::is_simplicial_unchecked(g, v))
            .ok_or(ConstructiveError::Postcondition { set: vec![] })?;
        let r = theorem2_cds(g, v, false)?;
        return done(r.set, CorollaryBranch::Theorem2 { trace: r.trace });
    }
    if g.is_clique(g.vertices()) {
        return done(VertexSet::singleton(0), CorollaryBranch::Complete);
    }
    // alpha <= 2: G - N[0] is a clique reached through some neighbor of 0
    let far = g.vertices() - g.closed_adj(0);
    let mut set = VertexSet::singleton(0);
    if let Some((a, b)) = g
        .adj(0)
        .iter()
        .find_map(|a| (g.adj(a) & far).first().map(|b| (a, b)))
    {
        set = set.with(a).with(b);
    }
    if !is_cds_unchecked(g, set) {
        if let Some(d) = (1..=3)
            .flat_map(|k| subsets_of_size(g.vertices(), k))
            .find(|&d| d.contains(0) && is_cds_unchecked(g, d))
        {
            set = d;
        }
    }
    done(set, CorollaryBranch::SmallStability)
}

/// Builds an h-sequence by peeling connected dominating sets.
///
/// Starting from the largest component, each round takes `D = corollary_cds`
/// of the current connected remainder `R` and continues in the largest
/// component of `R - D`. Every `D` dominates everything peeled after it, so
/// listing the sets in reverse peeling order satisfies the joining clause.
/// Peeling stops before a round that would leave no edge; the head is then
/// the smallest edge of `R`.
pub fn build_h_certificate(g: &Graph) -> Result<HSequence, ConstructiveError> {
    Hypotheses {
        connected: false,
        ..HYPOTHESES
    }
    .check(g)?;

    let mut current = g.components().largest().expect("nonempty graph");
    if current.len() == 1 {
        return Ok(HSequence::single(current.first().unwrap()));
    }
    let mut peeled = Vec::new();
    loop {
        let (sub, map) = g.induced_unchecked(current);
        let d = Graph::lift(&map, corollary_cds_checked(&sub)?.set);
        let rest = current - d;
        let next = g
            .components_within(rest)
            .into_iter()
            .fold(VertexSet::EMPTY, |best, c| {
                if c.len() > best.len() {
                    c
                } else {
                    best
                }
            });
        if next.len() < 2 {
            break;
        }
        peeled.push(d);
        current = next;
    }
    let head = g
        .edges()
        .find(|&(u, v)| current.contains(u) && current.contains(v))
        .expect("connected remainder with two vertices has an edge");
    peeled.reverse();
    Ok(HSequence {
        head: vec![head.0, head.1],
        tail: peeled,
    })
}
