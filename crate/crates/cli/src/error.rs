use std::path::PathBuf;
use thiserror::Error;

pub const USAGE: u8 = 64;
pub const IO: u8 = 74;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] egstab::Error),
    /// Failure inside a verification run.
    #[error("internal error: {0}")]
    Internal(egstab::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => USAGE,
            CliError::Io { .. } | CliError::Core(egstab::Error::Io(_)) => IO,
            CliError::Core(_) => USAGE,
            CliError::Internal(_) => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
