use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    Dimension(String),

    #[error("rank {rank} exceeds min(p, r) = {max}")]
    Rank { rank: usize, max: usize },

    #[error("regime violation: {0}")]
    Regime(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("design matrix is numerically singular (condition estimate {condition:.3e})")]
    SingularDesign { condition: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("argument {value} outside the domain ({domain})")]
    Domain { value: f64, domain: String },

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("evaluation point {t} collides with a singular value of the noise matrix")]
    Pole { t: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("cannot aggregate: {0}")]
    Aggregation(String),

    #[error("replication {index}: {source}")]
    Replication {
        index: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn domain(value: f64, domain: impl Into<String>) -> Self {
        Error::Domain {
            value,
            domain: domain.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Usage-type errors (bad input or configuration) as opposed to numeric
    /// failures during a computation.
    pub fn is_usage(&self) -> bool {
        match self {
            Error::Dimension(_)
            | Error::Rank { .. }
            | Error::Regime(_)
            | Error::Parameter(_)
            | Error::Empty(_)
            | Error::Io { .. }
            | Error::Json { .. } => true,
            Error::Replication { source, .. } => source.is_usage(),
            _ => false,
        }
    }
}
