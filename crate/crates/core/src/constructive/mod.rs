//! Constructive domination procedures: the dominating edge for stability
//! number two, the connected dominating set of size at most four for
//! claw-free graphs of stability number three, and the inductive
//! h-certificate builder on top of them.
//!
//! Every procedure checks its hypotheses up front. Branches that the case
//! analysis rules out are still coded: reaching one returns
//! [`ConstructiveError::Contradiction`] with the forbidden structure found.

mod certificate;
mod partition;
mod theorem1;
mod theorem2;
mod trace;

use std::fmt;

use serde::Serialize;

pub use certificate::{build_h_certificate, corollary_cds, CorollaryBranch, CorollaryCds};
pub use partition::{partition_t2, PartitionT2};
pub use theorem1::{theorem1_edge, DominatingEdge};
pub use theorem2::{theorem2_cds, GapReport, GapStage, T2Outcome};
pub use trace::{CaseLabel, CaseTrace};

use crate::error::ConstructiveError;
use crate::graph::Graph;
use crate::invariants::{self, Claw};

/// Stability-number hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaBound {
    Exactly(usize),
    AtMost(usize),
}

impl AlphaBound {
    pub fn admits(self, alpha: usize) -> bool {
        match self {
            AlphaBound::Exactly(k) => alpha == k,
            AlphaBound::AtMost(k) => alpha <= k,
        }
    }
}

/// A failed hypothesis or a forbidden structure, with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyGraph,
    Disconnected,
    StabilityNumber { required: AlphaBound, found: usize },
    Claw { claw: Claw },
    InducedCycle { length: usize, cycle: Vec<usize> },
    Simplicial { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGraph => write!(f, "graph is empty"),
            Violation::Disconnected => write!(f, "graph is not connected"),
            Violation::StabilityNumber { required, found } => match required {
                AlphaBound::Exactly(k) => {
                    write!(f, "stability number is {found}, need exactly {k}")
                }
                AlphaBound::AtMost(k) => write!(f, "stability number is {found}, need at most {k}"),
            },
            Violation::Claw { claw } => write!(
                f,
                "claw centered at {} with leaves {:?}",
                claw.center, claw.leaves
            ),
            Violation::InducedCycle { length, cycle } => {
                write!(f, "induced C{length} on {cycle:?}")
            }
            Violation::Simplicial { vertex } => write!(f, "vertex {vertex} is simplicial"),
        }
    }
}

/// Which hypotheses a procedure needs.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Hypotheses {
    pub connected: bool,
    pub claw_free: bool,
    pub alpha: AlphaBound,
    pub forbidden_cycle: usize,
}

impl Hypotheses {
    pub(crate) fn check(&self, g: &Graph) -> Result<(), ConstructiveError> {
        let fail = |v| Err(ConstructiveError::Precondition(v));
        if g.order() == 0 {
            return fail(Violation::EmptyGraph);
        }
        if self.connected && !g.is_connected() {
            return fail(Violation::Disconnected);
        }
        let alpha = invariants::independence_number(g);
        if !self.alpha.admits(alpha) {
            return fail(Violation::StabilityNumber {
                required: self.alpha,
                found: alpha,
            });
        }
        if self.claw_free {
            if let Some(claw) = invariants::find_claw(g) {
                return fail(Violation::Claw { claw });
            }
        }
        if let Some(cycle) =
            invariants::find_induced_cycle(g, self.forbidden_cycle).expect("cycle length >= 4")
        {
            return fail(Violation::InducedCycle {
                length: self.forbidden_cycle,
                cycle,
            });
        }
        Ok(())
    }
}

/// Checks `v` is in range and has two nonadjacent neighbors; returns the
/// smallest such pair.
pub(crate) fn non_simplicial_pair(
    g: &Graph,
    v: usize,
) -> Result<(usize, usize), ConstructiveError> {
    g.check_vertex(v)?;
    invariants::nonadjacent_neighbor_pair(g, v).ok_or(ConstructiveError::Precondition(
        Violation::Simplicial { vertex: v },
    ))
}

/// Wraps a cycle that the analysis claims cannot exist, after re-checking it.
pub(crate) fn forbidden_cycle(g: &Graph, cycle: Vec<usize>) -> Option<ConstructiveError> {
    invariants::is_induced_cycle(g, &cycle).then_some(ConstructiveError::Contradiction(
        Violation::InducedCycle {
            length: cycle.len(),
            cycle,
        },
    ))
}

pub(crate) fn forbidden_claw(
    g: &Graph,
    center: usize,
    leaves: [usize; 3],
) -> Option<ConstructiveError> {
    let mut sorted = leaves;
    sorted.sort_unstable();
    let claw = Claw {
        center,
        leaves: sorted,
    };
    claw.holds_in(g)
        .then_some(ConstructiveError::Contradiction(Violation::Claw { claw }))
}
