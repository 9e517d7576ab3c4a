use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("edge {{{u},{v}}}_{color} does not exist")]
    NoSuchEdge { u: usize, v: usize, color: usize },

    #[error("edge {{{u},{v}}} is a loop")]
    LoopEdge { u: usize, v: usize },

    #[error("edge {{{u},{v}}} is not incident to the root")]
    NotRootEdge { u: usize, v: usize },

    #[error("ranking is not a permutation of 1..={0}")]
    InvalidRanking(usize),

    #[error("labeling has {got} values, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("root value must be -1, got {0}")]
    RootValue(i64),

    #[error("vertex {0} has a negative value")]
    NegativeValue(usize),

    #[error("not a G-parking function")]
    NotParking,

    #[error("vertex 0 has no bridge status")]
    RootVertex,

    #[error("expected f(u) = 0 at vertex {0}")]
    ExpectedZero(usize),

    #[error("expected f(u) >= 1 at vertex {0}")]
    ExpectedPositive(usize),

    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),

    #[error("not a classical parking function")]
    NotClassicalParking,

    #[error("unknown {kind} `{name}`")]
    UnknownStrategy { kind: &'static str, name: String },

    #[error("`{0}` is already registered")]
    DuplicateStrategy(String),

    #[error("arithmetic overflow")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input that could not be understood at all, as opposed to well-formed
    /// input that fails a mathematical condition.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::UnknownStrategy { .. }
                | Error::InvalidRanking(_)
                | Error::LengthMismatch { .. }
                | Error::VertexOutOfRange { .. }
                | Error::EmptyGraph
                | Error::NegativeValue(_)
        )
    }
}
