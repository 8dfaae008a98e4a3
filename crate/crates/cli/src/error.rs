use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("field {field}: {source}")]
    Field {
        field: String,
        source: Box<rpoisson::Error>,
    },
    #[error("{0}")]
    Core(Box<rpoisson::Error>),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for failures of a mathematical condition, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        use rpoisson::Error as E;
        let core = match self {
            CliError::Core(e) | CliError::Field { source: e, .. } => e,
            _ => return 2,
        };
        match **core {
            E::JacobsonFailure { .. } | E::VanishingFailure(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn field(field: impl Into<String>) -> impl FnOnce(rpoisson::Error) -> CliError {
        let field = field.into();
        move |source| CliError::Field {
            field,
            source: Box::new(source),
        }
    }

    pub(crate) fn at(field: &str, source: rpoisson::Error) -> CliError {
        CliError::Field {
            field: field.into(),
            source: Box::new(source),
        }
    }
}

impl From<rpoisson::Error> for CliError {
    fn from(e: rpoisson::Error) -> Self {
        CliError::Core(Box::new(e))
    }
}
