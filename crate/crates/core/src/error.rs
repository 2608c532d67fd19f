use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A configured resource cap (memory, divisor count, scan length) was exceeded.
    #[error("resource cap exceeded: {what} requires {requested}, cap is {cap}")]
    Resource {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    /// A query fell outside the range a table was built for.
    #[error("{x} is outside the table range 1..={limit}")]
    Range { x: u64, limit: u64 },
    /// Fixed-width arithmetic would have wrapped.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// A search that is expected to succeed found nothing.
    #[error("not found: {0}")]
    NotFound(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
