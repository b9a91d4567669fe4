use thiserror::Error;

/// Errors raised by the exact group-law machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (dimensions, indices, orders, names).
    #[error("invalid input: {0}")]
    Input(String),
    /// A matrix that had to be inverted is singular.
    #[error("singular matrix")]
    Singular,
    /// A value that must lie in the span of an algebra basis does not.
    #[error("representation error: {0}")]
    Representation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
