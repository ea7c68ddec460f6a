use thiserror::Error;

/// Errors raised by the engines. Validation failures map to CLI exit code 2,
/// everything else to exit code 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("result is indistinguishable from zero at the working precision")]
    Inexact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("divergent integral for multiplier {0}")]
    Divergent(String),
    #[error("no rational function with the requested degree bounds matches the series")]
    NoSolution,
    #[error("reconstruction is not unique: {0}")]
    AmbiguousSolution(String),
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("form is not strongly non-degenerate: singular point {0:?} mod p")]
    NondegeneracyFailed(Vec<u32>),
    #[error("evaluation point lies within {distance:e} of the pole at {pole_re}{pole_im:+}i")]
    PoleProximity {
        pole_re: f64,
        pole_im: f64,
        distance: f64,
    },
    #[error("alpha = {re}{im:+}i is a pole of the local gamma factor or its reciprocal")]
    PoleOfGamma { re: f64, im: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-domain input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::Parse(_) | Error::FieldMismatch(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
