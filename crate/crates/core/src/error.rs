use crate::ExactRatio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's stated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Matrix operand dimensions do not line up.
    #[error("shape mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    Shape {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    /// A rational that was expected to reduce to an integer did not.
    /// Carries the reduced value as evidence.
    #[error("non-integral value {0}")]
    NonIntegral(ExactRatio),

    /// The enumeration oracle hit its node-expansion budget. No partial
    /// count is returned.
    #[error("enumeration budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },

    /// Identity key not present in the registry.
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
