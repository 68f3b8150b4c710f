use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("tag/parameter mismatch: {0}")]
    TagMismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
