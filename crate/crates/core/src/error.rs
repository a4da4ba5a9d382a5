use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    UnknownVertex { vertex: Vertex, n: usize },

    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph of order {n} exceeds the exhaustive-search limit {limit}")]
    OverLimit { n: usize, limit: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("move rejected: {0}")]
    MoveRejected(String),
}
