use thiserror::Error;

/// Errors produced by graph construction, coloring, verification and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown vertex x{0}")]
    UnknownVertex(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("coloring covers {found} edges but the graph has {expected}")]
    ColoringMismatch { expected: usize, found: usize },

    #[error("edge {edge} has color {color}, outside 1..={m}")]
    ColorOutOfRange { edge: usize, color: usize, m: usize },

    #[error("a homogeneous coloring needs at least 2 colors, got {0}")]
    TooFewColors(usize),

    #[error("graph is not a cycle")]
    NotACycle,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not eulerian")]
    NotEulerian,

    #[error("no {m}-homogeneous coloring exists")]
    NoHomogeneousColoring { m: usize },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("exhaustive enumeration over {edges} edges exceeds the bound of {bound}")]
    ExhaustiveBoundExceeded { edges: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
