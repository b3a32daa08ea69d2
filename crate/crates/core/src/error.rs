use thiserror::Error;

/// Failures raised by the engine.
///
/// `Domain` means the caller asked for something that does not exist
/// (bad rank, a non-root, a non-transversal). `Structural` means an internal
/// identity failed to hold, which points at a convention bug rather than
/// bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("structural error: {0}")]
    Structural(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }

    /// Prefixes the message with some context, keeping the kind.
    pub fn context(self, ctx: &str) -> Self {
        match self {
            Error::Domain(m) => Error::Domain(format!("{ctx}: {m}")),
            Error::Structural(m) => Error::Structural(format!("{ctx}: {m}")),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
