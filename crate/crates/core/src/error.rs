use thiserror::Error;

/// Errors raised by hopfkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("not semisimple: {0}")]
    NotSemisimple(String),

    #[error("integral space has dimension {found}, expected 1 ({side}); input is corrupted")]
    IntegralSpace { side: &'static str, found: usize },

    #[error("field too small: {0}; retry with a larger --cyclotomic order")]
    FieldTooSmall(String),

    #[error("no splitting element found after {0} attempts")]
    RetriesExhausted(usize),

    #[error("non-square block trace {0}")]
    NonSquareTrace(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("algorithm failure: {0}")]
    Algorithm(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
