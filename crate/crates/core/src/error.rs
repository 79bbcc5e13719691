use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource cap exceeded: {what} (cap {cap})")]
    CapExceeded { what: String, cap: usize },
    #[error("exponent out of range: {0}")]
    ExponentRange(i64),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
