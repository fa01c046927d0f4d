//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the PER library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A scheme, method or channel combination that is not supported.
    #[error("configuration error: {0}")]
    Config(String),

    /// A numerical integration did not reach the requested tolerance.
    #[error(
        "no convergence after {evaluations} evaluations: best estimate {best} \
         (estimated abs error {abs_error:e})"
    )]
    Convergence {
        best: f64,
        abs_error: f64,
        evaluations: usize,
    },

    /// Derivative order beyond what the polygamma backend supports.
    #[error("unsupported derivative order {0} (maximum is {max})", max = crate::fading::MAX_DERIVATIVE_ORDER)]
    UnsupportedOrder(usize),

    /// The exact binomial series was asked for a packet length where it loses all precision.
    #[error("refusing unstable evaluation: {0}")]
    Stability(String),

    /// A result failed a self-consistency check (a bug, not bad input).
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
