use std::fmt;
use std::process::ExitCode;

use hypotrochoid_core::Error as CoreError;

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// A check or comparison did not hold (exit 1).
    Check(String),
    /// Bad arguments or inputs outside a precondition (exit 2).
    Usage(String),
    /// Reading or writing a file failed (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Io(e) => CliError::Io(e.to_string()),
            CoreError::Domain(_) | CoreError::Parse { .. } | CoreError::Unsupported(_) | CoreError::Pole(_) => {
                CliError::Usage(e.to_string())
            }
            CoreError::Singular(_) | CoreError::Numeric(_) => CliError::Check(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
