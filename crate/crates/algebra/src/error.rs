use thiserror::Error;

/// Failures raised by the polynomial and ideal layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("degree error: {0}")]
    Degree(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("step budget of {budget} reductions exhausted")]
    Resource { budget: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::Dimension { expected, found })
    }
}
