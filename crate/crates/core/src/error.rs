use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes that do not fit together (tensor sizes, vector lengths).
    #[error("structural error: {0}")]
    Structural(String),
    #[error("invalid label index {index} (rank {rank})")]
    InvalidIndex { index: usize, rank: usize },
    #[error("numerical error: {0}")]
    Numerical(String),
    /// Eigenvalue clustering could not be resolved after all retries.
    #[error("numerical degeneracy: {0}")]
    Degenerate(String),
    #[error("capability limit: {0}")]
    Capability(String),
    #[error("inconsistent modular data: {0}")]
    InconsistentData(String),
    #[error("algebra is not semisimple or input is malformed: {0}")]
    NotSemisimple(String),
    /// A theorem-level identity failed; the input data cannot come from a real condensation.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
