use thiserror::Error;

/// Errors raised by graph, map and evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("cannot contract loop edge {0}")]
    ContractLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what}: {size} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("map is not spherical: V - E + F = {euler} (expected 2)")]
    NotSpherical { euler: i64 },

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid sign {0} (expected +1 or -1)")]
    InvalidSign(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
