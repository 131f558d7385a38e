use std::fmt;

/// Process exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 I/O error. Malformed input never panics.
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_IO_ERROR: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-contract input (exit code 2).
    Input(String),
    /// Unreadable input file or unwritable output (exit code 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT_ERROR,
            CliError::Io(_) => EXIT_IO_ERROR,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qubit_geometry::Error> for CliError {
    fn from(err: qubit_geometry::Error) -> Self {
        CliError::Input(err.to_string())
    }
}
