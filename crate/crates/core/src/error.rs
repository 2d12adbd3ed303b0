use thiserror::Error;

/// Errors raised by the library. Conjecture failures are never errors; they are
/// reported as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("cannot parse shape at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division by zero: {0}")]
    ZeroDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
