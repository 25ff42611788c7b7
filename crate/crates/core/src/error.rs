use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input (line {line}): {message}")]
    Malformed { line: usize, message: String },

    #[error("graph contains a cycle (edge {0}-{1} closes it)")]
    CycleDetected(usize, usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },

    #[error("root {0} is not in the given component")]
    RootNotInComponent(usize),

    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),

    #[error("{found} minimum sets exceed the enumeration limit of {limit}")]
    LimitExceeded { found: String, limit: usize },

    #[error("graph has {n} vertices, more than the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("input is not a single tree")]
    NotATree,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("domain error: {0}")]
    Domain(String),
}
