use thiserror::Error;

/// Failures that end a run with exit code 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    #[error("invalid report: {0}")]
    InvalidReport(String),
    #[error("{0}")]
    Usage(String),
}

/// The process exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Malformed = 1,
    Incompatible = 2,
    Sterile = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}
