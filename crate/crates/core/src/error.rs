use thiserror::Error;

/// Errors reported by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid size: {0}")]
    InvalidSize(&'static str),
    #[error("the graph is not a tree")]
    NotATree,
    #[error("the tree is not a unit bar visibility tree")]
    NotUbvt,
    #[error("bars {first} and {second} intersect")]
    IntersectingBars { first: usize, second: usize },
    #[error("input too large: {size} exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),
    #[error("coordinates cannot be brought to a common integer scale")]
    CoordinateOverflow,
}
