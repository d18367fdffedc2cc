use std::io;

use thiserror::Error;

/// Errors raised by the library and mapped onto CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation
    /// (composite modulus, even prime, non-fundamental discriminant, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A request the operation does not support (bad range, wrong residue
    /// class for an identity, unsupported denominator, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A consistency check inside the library failed. Indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// Wraps a delegate error with the prime and check it came from.
    #[error("p = {p}, {check}: {source}")]
    Context {
        p: u64,
        check: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn at(self, p: u64, check: impl Into<String>) -> Self {
        Error::Context {
            p,
            check: check.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
