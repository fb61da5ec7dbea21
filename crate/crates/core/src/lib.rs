//! Exact algorithms for connected domination in graphs of small stability
//! number.
//!
//! Graphs have at most 64 vertices and use one `u64` adjacency row per
//! vertex. On top of the representation the crate provides exact
//! invariants ([`invariants`]), the h-invariant and clique minors
//! ([`minors`]), and the constructive domination procedures with case traces
//! ([`constructive`]).

pub mod constructive;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod minors;

pub use constructive::{
    build_h_certificate, corollary_cds, partition_t2, theorem1_edge, theorem2_cds, CaseLabel,
    CaseTrace,
};
pub use error::{ConstructiveError, Graph6Error, GraphError, InvariantError, MinorError};
pub use graph::{Graph, VertexPartition, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use minors::{h_number, hadwiger_number, verify_h_sequence, HSequence, MinorModel};
