//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by graph construction, entropy kernels, signal
/// generators, and the CSV parsers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Every vertex was excluded from pattern extraction, so no
    /// distribution can be formed.
    #[error("no valid patterns: {0}")]
    NoValidPatterns(String),

    /// A generated orbit or trajectory left the finite range.
    #[error("divergence at sample {index}: |state| exceeded {limit:e}")]
    Divergence { index: usize, limit: f64 },

    /// Malformed CSV input. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
