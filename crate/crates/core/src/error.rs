use thiserror::Error;

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration hit its cap before meeting its tolerance.
    #[error("{what} did not converge after {iterations} iterations")]
    ConvergenceFailure {
        what: &'static str,
        iterations: usize,
    },

    /// Quadrature could not certify the requested tolerance.
    #[error("quadrature tolerance {tol:e} not met: best estimate {value} with error estimate {err_estimate:e}")]
    ToleranceNotMet {
        value: f64,
        err_estimate: f64,
        tol: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
