//! Library half of the `hdqkd` binary: argument types, result documents and
//! renderers. `main.rs` only parses and dispatches.

pub mod args;
pub mod commands;
pub mod document;
pub mod render;

use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Config(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Io(_) | CliError::Internal(_) => 1,
        })
    }
}

impl From<hdqkd_core::Error> for CliError {
    fn from(e: hdqkd_core::Error) -> Self {
        match e {
            hdqkd_core::Error::Config(m) => CliError::Config(m),
            hdqkd_core::Error::UnknownGate(g) => CliError::Config(format!("unknown gate {g}")),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
