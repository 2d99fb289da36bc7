use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vector lengths or indices do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The weight vector is zero, so distances are undefined.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An enumeration would exceed the configured cap or budget.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A value does not fit the integer fast path.
    #[error("overflow: {0}")]
    Overflow(String),
    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn dimension(expected: usize, got: usize, what: &str) -> Error {
    Error::Dimension(format!("{what}: expected length {expected}, got {got}"))
}
