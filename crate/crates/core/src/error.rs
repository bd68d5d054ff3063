use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain the routine supports.
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    /// The density of the cube has an integrable pole at the origin.
    #[error("density is singular at x = 0")]
    Singularity,

    /// A quadrature could not reach its requested accuracy.
    #[error("quadrature tolerance not met: estimated error {est_error:e} exceeds target {target:e}")]
    ToleranceNotMet { est_error: f64, target: f64 },

    /// A caller-side contract was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64) -> Error {
    Error::Domain { what, value }
}
