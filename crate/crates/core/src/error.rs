use thiserror::Error;

use crate::constructive::{GapReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, the limit is 64")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("adjacency is not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("sparse6 input is not supported")]
    Sparse6,
    #[error("digraph6 input is not supported")]
    Digraph6,
    #[error("invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 header encodes {n} vertices, the limit is 64")]
    TooLarge { n: usize },
    #[error("truncated edge section: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after the edge section")]
    TrailingData,
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("induced cycles need at least 4 vertices, asked for {k}")]
    CycleTooShort { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("exact search is capped at {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructiveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(Violation),
    /// A branch the case analysis rules out was reached; carries the forbidden structure.
    #[error("contradiction branch reached: {0}")]
    Contradiction(Violation),
    #[error("no case of the analysis applies ({stage})", stage = .0.stage)]
    CaseGap(Box<GapReport>),
    #[error("no connected dominating set of size at most 4 contains vertex {vertex}")]
    NoSmallCds { vertex: usize },
    #[error("constructed set {set:?} fails the domination postcondition")]
    Postcondition { set: Vec<usize> },
}
