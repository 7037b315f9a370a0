use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A point outside the open unit disk (or a non-finite value) reached an evaluator.
    #[error("point {z} lies outside the open unit disk")]
    Domain { z: Complex64 },

    /// A parameter violates the hypothesis of the named result.
    #[error("{context}: requires {hypothesis}")]
    Inadmissible {
        context: &'static str,
        hypothesis: String,
    },

    #[error("{context}: parameter `{name}` is not set")]
    MissingParam {
        context: &'static str,
        name: &'static str,
    },

    #[error("map is not normalized: f(0) = {value}")]
    NotNormalized { value: Complex64 },

    #[error("{0} has no designated extremal mapping")]
    NoExtremal(String),

    #[error("radius {r} too small to recover coefficients up to degree {degree}")]
    Amplification { r: f64, degree: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("quadrature did not reach tolerance {tolerance:e} (estimate {estimate:e})")]
    Quadrature { tolerance: f64, estimate: f64 },
}

impl Error {
    pub(crate) fn inadmissible(context: &'static str, hypothesis: impl Into<String>) -> Self {
        Error::Inadmissible {
            context,
            hypothesis: hypothesis.into(),
        }
    }
}
