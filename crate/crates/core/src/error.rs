use thiserror::Error;

/// Failures reported by the engine. Resource guards are distinct from bad input so
/// callers can tell "too big to decide" apart from "wrong".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("guard exceeded: {what} (limit {limit})")]
    Guard { what: String, limit: usize },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn guard(what: impl Into<String>, limit: usize) -> Self {
        Error::Guard {
            what: what.into(),
            limit,
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
