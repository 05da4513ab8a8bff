use std::fmt;
use std::io;

use pfib_core::Error;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    VerificationFailed(usize),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::CapExceeded { .. }) => 4,
            CliError::Core(Error::BadDenominator(_)) | CliError::Io(_) => 1,
            CliError::Core(_) => 2,
            CliError::VerificationFailed(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::VerificationFailed(n) => write!(f, "{n} check(s) failed"),
            CliError::Io(e) => write!(f, "write failed: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}
