use thiserror::Error;

/// Errors raised by the algebra, series and modular-form layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("malformed json: {0}")]
    Json(String),
    /// A mathematical identity that must hold was observed to fail.
    #[error("identity falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn json(msg: impl Into<String>) -> Self {
        Error::Json(msg.into())
    }

    /// True for errors that signal a falsified identity rather than bad input.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Falsified(_))
    }
}
