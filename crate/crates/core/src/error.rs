use crate::graph::{Edge, Vertex};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("pair {{{0}, {1}}} does not separate the graph")]
    NotSeparating(Vertex, Vertex),

    #[error("graph has {actual} vertices; at most {limit} are supported")]
    UnsupportedSize { actual: usize, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("no distance given for edge {0}")]
    MissingDistance(Edge),

    #[error("distance for edge {0} must be positive")]
    NonPositiveDistance(Edge),

    #[error("unsupported topology: {0}")]
    UnsupportedTopology(String),

    #[error("resultant vanished at stage {stage}; distances are degenerate")]
    DegenerateResultant { stage: String },

    #[error("both polynomials are free of variable {0}")]
    DegenerateInput(String),

    #[error("graph is not quadratically constructible from the base edge")]
    NotQuadraticallyConstructible,

    #[error("distances are not realizable: every construction branch has a negative discriminant")]
    UnrealizableDistances,

    #[error("polynomial is reducible over the rationals; factor it first")]
    Reducible,
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by malformed input text rather than by a
    /// violated mathematical precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
