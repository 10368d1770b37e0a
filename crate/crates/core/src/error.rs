use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Fewer than two vertices, so no pair of nonempty disjoint sets exists.
    #[error("no pair: {0}")]
    NoPair(String),

    /// Every candidate pair has an empty side.
    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("resource limit: {what} is {actual}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
