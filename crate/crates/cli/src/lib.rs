//! Command-line front end: tables, polynomials, plot samples and the
//! verification report as text, CSV or JSON.

pub mod args;
mod commands;

use std::io::{self, Write};

pub use args::{Cli, Command, Common, Format};
pub use commands::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gramkern::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

/// Process exit status for a completed run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
        }
    }
}

pub const USAGE_EXIT: i32 = 2;

/// Runs `cli`, writing to `--out` when given, otherwise to `stdout`.
pub fn run_to(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.common.out {
        Some(path) => {
            let mut buf = Vec::new();
            let status = run(cli, &mut buf)?;
            std::fs::write(path, buf)?;
            Ok(status)
        }
        None => run(cli, stdout),
    }
}
