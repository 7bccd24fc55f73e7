use std::path::PathBuf;

use thiserror::Error;

/// Process exit status. The numeric values are a stable contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    Failure = 1,
    Input = 2,
    Budget = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_passed(passed: bool) -> Exit {
        if passed {
            Exit::Pass
        } else {
            Exit::Failure
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}:{line}:{column}: {message}", path.display())]
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    /// A well-formed JSON document whose content is inconsistent.
    #[error("{}: {location}: {message}", path.display())]
    Document {
        path: PathBuf,
        location: String,
        message: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] homcert_core::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Core(homcert_core::Error::Precondition { .. }) => Exit::Failure,
            CliError::Core(homcert_core::Error::Budget { .. }) => Exit::Budget,
            _ => Exit::Input,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn json(path: impl Into<PathBuf>, e: &serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep only the message
        let message = message
            .rsplit_once(" at line ")
            .map_or(message.clone(), |(m, _)| m.to_string());
        CliError::Json {
            path: path.into(),
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
