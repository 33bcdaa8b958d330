use thiserror::Error;

use crate::lang::{ParseError, Pos};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("parse error")]
    Parse(#[from] ParseError),
    #[error("{pos}: {object}: {message}")]
    Semantic { pos: Pos, object: String, message: String },
    #[error("unknown object '{0}'")]
    UnknownObject(String),
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error("missing fixture data: {0}")]
    Missing(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Engine(#[from] gorenstein::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
