use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(VertexId, VertexId),
    #[error("vertex {0} has non-positive weight")]
    NonPositiveWeight(VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("weight vector has length {got}, expected {expected}")]
    WeightCount { expected: usize, got: usize },
    #[error("vertex weights too large: n * max weight must stay below 2^62")]
    WeightOverflow,
    #[error("graph is complete, no vertex cut exists")]
    CompleteGraph,

    #[error("cut sides are not a partition of the vertex set")]
    NotTriPartition,
    #[error("cut has an empty side")]
    EmptySide,
    #[error("edge ({0}, {1}) crosses from the left side to the right side")]
    CrossingEdge(VertexId, VertexId),
    #[error("invalid cut of the reduced graph: {0}")]
    InvalidCut(Box<Error>),
    #[error("vertex {0} is not in the in-copy of the reduced graph")]
    NotInCopy(VertexId),
    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("source and sink coincide ({0})")]
    SamePair(VertexId),
    #[error("({0}, {1}) are adjacent, no separating cut exists")]
    AdjacentPair(VertexId, VertexId),
    #[error("flow value overflowed the accumulator")]
    Overflow,

    #[error("terminal set needs at least two distinct vertices")]
    TerminalSetTooSmall,
    #[error("oracle budget exceeded: {n} vertices, limit {max_n}")]
    BudgetExceeded { n: usize, max_n: usize },
}
