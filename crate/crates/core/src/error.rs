use thiserror::Error;

/// Failure categories shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable code used in diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse_error",
            Error::Domain(_) => "domain_error",
            Error::Resource(_) => "resource_error",
            Error::Internal(_) => "internal_error",
        }
    }

    /// Process exit status for the command-line front end.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Domain(_) => 3,
            Error::Resource(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
