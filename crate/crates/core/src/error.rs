use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("point set does not span its ambient space (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },

    #[error("halfspace system is unbounded")]
    Unbounded,

    #[error("origin is not an interior point")]
    OriginNotInterior,

    #[error("invalid sum: {0}")]
    InvalidSum(String),

    #[error("body is not unconditional")]
    NotUnconditional,

    #[error("body is not normalized: {0}")]
    NotNormalized(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid hanner tree: {0}")]
    InvalidTree(String),

    #[error("inconsistent section graphs: {0}")]
    InconsistentSections(String),

    #[error("ambiguous section graph: gauge of e{i}+e{j} is {gauge}, inside the tolerance band")]
    AmbiguousSection { i: usize, j: usize, gauge: String },

    #[error("falsification event: {0}")]
    Falsified(String),

    #[error("too large: {0}")]
    Resource(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
