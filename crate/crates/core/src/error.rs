use thiserror::Error;

/// Errors raised by the series engine, the numeric solver and the oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad input: mismatched truncation orders, out-of-range sizes and so on.
    #[error("usage error: {0}")]
    Usage(String),
    /// An operation that has no formal power series result (non-unit leading
    /// term, inexact division, logarithm of a non-unit series).
    #[error("domain error: {0}")]
    Domain(String),
    /// The singular system could not be solved or is degenerate.
    #[error("solver error: {0}")]
    Solver(String),
    /// An internal consistency check failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
