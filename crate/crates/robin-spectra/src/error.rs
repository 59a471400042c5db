use thiserror::Error;

/// Errors produced by solvers, optimizers, suites and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid mathematical input (non-positive length, k = 0, negative α, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed invocation: unknown suite name, bad spec string, bad flag combination.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
