//! Command implementations behind the `qshuffle` binary.
//!
//! Every command returns a JSON value and an exit code; `main` only parses
//! arguments and writes the output.

pub mod commands;
pub mod input;
pub mod report;
pub mod selftest;

use qshuffle::{CartanError, ClosureViolation, SeriesError, ShuffleError};
use thiserror::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CLOSURE: i32 = 3;
    pub const SERRE_NONZERO: i32 = 4;
    pub const WHEEL_VIOLATED: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Closure(#[from] ClosureViolation),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl From<ShuffleError> for CliError {
    fn from(e: ShuffleError) -> Self {
        match e {
            ShuffleError::Closure(c) => CliError::Closure(c),
            ShuffleError::Cartan(c) => CliError::Cartan(c),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Closure(_) => exit::CLOSURE,
            CliError::Io { .. } => exit::FAILURE,
            _ => exit::USAGE,
        }
    }
}
