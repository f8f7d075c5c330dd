use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: expected index {expected}, found {found}")]
    Gap {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] hankel_core::Error),
}

impl CliError {
    /// Process exit code: 2 for configuration, input and I/O problems.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
