use thiserror::Error;

use crate::multigraph::{EdgeId, VertexId};

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("edge {0} has an endpoint out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} is not live")]
    DeadEdge(EdgeId),
    #[error("host multigraph is not regular")]
    NotRegular,
    #[error("host multigraph is not cubic")]
    NotCubic,
    #[error("regular degree {0} is too small (need d >= 2)")]
    DegreeTooSmall(usize),
    #[error("malformed operation record: {0}")]
    MalformedRecord(String),
    #[error("vectors have mismatched dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("edge {0} is on the wrong side of the subgraph")]
    WrongSide(EdgeId),
    #[error("adjustment touches b-index {0}, outside 1..=d")]
    IndexOutOfRange(i64),
    #[error("multi-star is stale: {0}")]
    StaleStar(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("component is too small to contract at vertex {0}")]
    TooSmall(VertexId),
    #[error("subgraph is not in the required state: {0}")]
    WrongState(String),
    #[error("subgraph is not proper")]
    NotProper,
    #[error("instance too large for exhaustive enumeration ({0} live edges)")]
    TooLarge(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("random pairing could not remove loops after {0} attempts")]
    RetryExhausted(usize),
    #[error("subgraph does not live on the expected host: {0}")]
    HostMismatch(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} were read")]
    InconsistentHeader { declared: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InternalInvariant(msg.into()))
}
