use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("element is not homogeneous for the weight vector: {0}")]
    NotHomogeneous(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;
