use thiserror::Error;

/// Errors raised by the library. The variants map onto the CLI exit codes:
/// `Domain`, `Integrity` and `Unsupported` exit with 1, `Malformed` with 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition of an operation does not hold for the given input.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input data could not be parsed or is internally inconsistent.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// An internal consistency check failed (for example `∂∂ ≠ 0`, or two
    /// independent computations disagree).
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
