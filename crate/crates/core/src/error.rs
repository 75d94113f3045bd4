use thiserror::Error;

/// Errors produced by the numerical engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("pole of {function} at s = {at}")]
    Pole { function: &'static str, at: String },

    #[error("table bound {requested} exceeds configured cap {cap}")]
    TableTooLarge { requested: usize, cap: usize },

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("tail bound {bound:e} cannot reach tolerance {tol:e} within {cap} terms")]
    TailUnreachable { bound: f64, tol: f64, cap: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
