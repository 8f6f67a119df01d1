use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown system `{name}`; available: {}", available.join(", "))]
    UnknownIfs { name: String, available: Vec<String> },
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("{0}")]
    Usage(String),
    #[error("invalid config {path}: {detail}")]
    Config { path: PathBuf, detail: String },
    #[error("system `{system}`: {source}")]
    System { system: String, source: blendifs_core::Error },
    #[error(transparent)]
    Core(#[from] blendifs_core::Error),
    #[error("{path}: {detail}")]
    Format { path: PathBuf, detail: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// `2` for usage errors, `1` for numerical, validation and IO failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownIfs { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
