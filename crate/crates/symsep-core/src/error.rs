use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the inputs was violated (out-of-range element,
    /// ambient mismatch, inadmissible set, malformed necklace, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The input is structurally corrupt (e.g. a trip fails to terminate).
    #[error("structural error: {0}")]
    Structural(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
