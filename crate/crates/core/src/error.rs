use std::fmt;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the cap of {cap} vertices", cap = crate::graph::Graph::MAX_VERTICES)]
    TooLarge(usize),
    #[error("{0} is not an edge of the bound graph")]
    MissingEdge(EdgeName),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Display helper for an edge `{u, v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeName(pub usize, pub usize);

impl fmt::Display for EdgeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
