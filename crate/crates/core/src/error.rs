use thiserror::Error;

/// Errors raised by graph construction, spectral kernels and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("matrix has order 0")]
    EmptyMatrix,

    #[error("matrix data has {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix entry at ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("matrix entry at ({row}, {col}) is not an integer")]
    NonIntegralEntry { row: usize, col: usize },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("expected a matrix of order {expected}, found {found}")]
    WrongOrder { expected: usize, found: usize },

    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("no sign change of the polynomial on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("linear solve failed: {0}")]
    SolverFailure(String),

    #[error("i/o error: {0}")]
    Io(String),
}

/// Decoding failures for graph6 lines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("character {found:?} at position {position} is outside the printable range 63..=126")]
    CharOutOfRange { position: usize, found: char },
    #[error("graphs with more than 62 vertices are not supported")]
    UnsupportedOrder,
    #[error("expected {expected} data characters for n = {order}, found {found}")]
    BadLength { order: usize, expected: usize, found: usize },
    #[error("padding bits in the final character are not zero")]
    NonzeroPadding,
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
