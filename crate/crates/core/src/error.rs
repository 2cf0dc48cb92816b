use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown key: {0}")]
    UnknownKey(String),

    #[error("invalid configuration: {0}")]
    Constraint(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Output { path: PathBuf, message: String },
}

impl SimError {
    /// Errors caused by the configuration rather than the environment.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            SimError::Syntax { .. } | SimError::UnknownKey(_) | SimError::Constraint(_) | SimError::Argument(_)
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        SimError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = SimError> = std::result::Result<T, E>;
