use thiserror::Error;

/// Errors raised by the numerical kernels and the p-function evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the legal domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// An iterative method stopped before meeting its tolerance.
    #[error("{what} did not converge (best estimate {estimate:e}, error estimate {error:e})")]
    Convergence {
        what: &'static str,
        estimate: f64,
        error: f64,
    },

    /// The root-finder was given an interval without a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// A configuration or parameter value violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Domain error for `name` lying outside the closed interval `[lo, hi]`.
    pub(crate) fn outside(name: &str, value: f64, lo: f64, hi: f64) -> Self {
        Error::Domain(format!("{name} must lie in [{lo}, {hi}], got {value}"))
    }

    /// Domain error for the half-open interval `[lo, hi)`.
    pub(crate) fn outside_half_open(name: &str, value: f64, lo: f64, hi: f64) -> Self {
        Error::Domain(format!("{name} must lie in [{lo}, {hi}), got {value}"))
    }
}
