use multest_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("stability error: {0}")]
    Stability(String),
    #[error("validation check ({check}) failed: {detail}")]
    Validation { check: String, detail: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("model construction error: {0}")]
    Model(String),
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Algebra(AlgebraError::Parse { .. }) => 1,
            Error::Algebra(AlgebraError::Resource { .. }) | Error::Resource(_) => 4,
            Error::Validation { .. } => 3,
            _ => 2,
        }
    }
}
