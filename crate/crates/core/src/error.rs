use crate::ComplexScalar;
use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: ComplexScalar },
    #[error("{function}: {reason}")]
    Domain { function: &'static str, reason: String },
    #[error("{function}: overflow at argument {arg}")]
    Overflow { function: &'static str, arg: f64 },
    #[error("s = {s} lies outside the convergence strip 0 < Re s < {upper}")]
    Strip { s: ComplexScalar, upper: f64 },
    #[error("tolerance {tolerance:e} not met after {subdivisions} subdivisions (estimated error {estimate:e})")]
    ToleranceNotMet {
        tolerance: f64,
        estimate: f64,
        subdivisions: usize,
    },
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("no convergence: {0}")]
    Convergence(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    pub(crate) fn pole(function: &'static str, at: ComplexScalar) -> Self {
        Error::Pole { function, at }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
