use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("coloring has {got} entries but graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring not proper: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("svcfc exceeds maxK = {0}")]
    ExceedsMaxK(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is complete; use complete-graph path")]
    CompleteGraph,
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    /// Line 0 means the document as a whole.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("assignment does not satisfy the formula (clause {0} unsatisfied)")]
    Unsatisfied(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
