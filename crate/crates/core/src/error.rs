use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor argument lies outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Structurally malformed input (wrong lengths, non-edges, parse failures).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The operation is well-formed but its mathematical precondition fails.
    #[error("domain error: {0}")]
    Domain(String),
    /// A construction that should always verify did not.
    #[error("internal inconsistency: {0}")]
    Internal(String),
    /// A search ran out of its node budget before deciding.
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! bail {
    ($kind:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$kind(format!($($arg)*)))
    };
}
pub(crate) use bail;
