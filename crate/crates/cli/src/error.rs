//! Errors and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    /// Malformed input: bad graph text, numbers, edges or argument values.
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] laman_core::Error),
}

impl CliError {
    /// 1 for unreadable or malformed input, 2 for a failed precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Input(_) => 1,
            CliError::Core(e) if e.is_parse_error() => 1,
            CliError::Core(_) => 2,
        }
    }
}
