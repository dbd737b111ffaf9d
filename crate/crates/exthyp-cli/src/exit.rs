//! Process exit codes and the error type shared by the subcommands.

use exthyp::Error;
use std::fmt;

pub const OK: i32 = 0;
pub const MALFORMED: i32 = 1;
pub const DOMAIN: i32 = 2;
pub const NO_CONVERGENCE: i32 = 3;
pub const NO_PASSING_VARIANT: i32 = 4;

/// Exit code for a library error.
pub fn code_for(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Pole(_) | Error::KernelMismatch(_) => DOMAIN,
        Error::NoConvergence(_) | Error::NonFinite(_) => NO_CONVERGENCE,
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or unreadable input files.
    Usage(String),
    Eval(Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => MALFORMED,
            CliError::Eval(e) => code_for(e),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Eval(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Eval(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
