use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("interpolation needs at least one point")]
    NoPoints,

    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    /// An exact division that the theory guarantees left a remainder.
    #[error("inexact division in {context}: remainder {remainder}")]
    InexactDivision { context: String, remainder: String },
}

impl CoreError {
    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        CoreError::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}
