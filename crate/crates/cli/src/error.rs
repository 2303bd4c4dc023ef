use thiserror::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for runtime failures.
pub const EXIT_RUNTIME: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// Help or version text was requested.
    #[error("{0}")]
    Help(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(#[from] openph_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Help(_) => EXIT_OK,
            Self::Usage(_) => EXIT_USAGE,
            Self::Runtime(_) | Self::Io(_) => EXIT_RUNTIME,
        }
    }
}
