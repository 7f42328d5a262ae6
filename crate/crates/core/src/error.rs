use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text did not match one of the line formats.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A value, or an arithmetic result derived from one, is out of range.
    #[error("range error: {0}")]
    Range(String),

    /// The operation was called on an input it does not accept.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A job-to-machine assignment does not fit the instance.
    #[error("malformed assignment: {0}")]
    Structural(String),

    /// The work required exceeds a configured cap.
    #[error("resource limit: {what} needs {required}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    /// A dynamic-programming table was inconsistent. Always a bug.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
