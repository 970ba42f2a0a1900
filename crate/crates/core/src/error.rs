use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was called outside its contract (mismatched truncation
    /// variables, non-finite expansions, bad arguments).
    #[error("usage error: {0}")]
    Usage(String),
    /// A numeric evaluation has no exact rational value.
    #[error("domain error: {0}")]
    Domain(String),
    /// Manifold data is missing or inconsistent.
    #[error("input error: {0}")]
    Input(String),
    /// The configuration is outside what the model defines.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
