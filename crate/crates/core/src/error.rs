use thiserror::Error;

/// Errors produced by the numerical kernels and the command front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method ran out of iterations. Never expected for
    /// in-domain inputs; treat as an internal defect.
    #[error("{what} did not converge after {iterations} iterations")]
    Convergence {
        what: &'static str,
        iterations: usize,
    },

    /// Malformed command-line request (unknown column, bad grid).
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// Rejects NaN eagerly.
pub(crate) fn check_nan(x: f64, what: &str) -> Result<()> {
    if x.is_nan() {
        Err(domain(format!("{what}: argument is NaN")))
    } else {
        Ok(())
    }
}
