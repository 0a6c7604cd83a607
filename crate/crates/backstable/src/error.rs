use thiserror::Error;

/// Error type shared by the whole crate.
///
/// The CLI maps each variant to a distinct exit code, so failures stay
/// distinguishable when driven from scripts.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text that does not denote a permutation, polynomial, or flag value.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A precondition on the mathematical domain was violated
    /// (window escapes `[1, n]`, identity where a non-identity is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured size limit would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Division by zero or a coefficient outside the fast integer range.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// An expansion or stabilization failed to close even after escalation.
    /// This flags either a theorem violation or a bug, and is never ignored.
    #[error("completeness error: {0}")]
    Completeness(String),

    /// Cache directory I/O failed.
    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedInput(_) | Error::Domain(_) => 2,
            Error::Resource(_) => 3,
            Error::Cache(_) => 4,
            Error::Arithmetic(_) | Error::Completeness(_) => 5,
        }
    }
}
