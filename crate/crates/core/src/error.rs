//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// |sin ω| rounds to zero at working precision, so csc/cot cannot be
    /// formed. Cannot occur for ω derived from s = 1/2 + it, which always
    /// has a small nonzero imaginary part.
    #[error("cosecant pole: |sin z| underflows at working precision")]
    CscPole,

    #[error("series tail not converged: {0}")]
    TailNotConverged(String),

    #[error("continued fraction did not converge within {iterations} iterations (likely regime misclassification)")]
    CfNonConvergence { iterations: usize },

    #[error("unsupported index {name}={value}, maximum is {max}")]
    UnsupportedIndex {
        name: &'static str,
        value: usize,
        max: usize,
    },

    #[error("insufficient precision: {0}")]
    PrecisionInsufficient(String),

    #[error("quadrature failure: {0}")]
    Quadrature(String),
}

impl Error {
    pub fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
