use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("point {u} lies inside the excluded interval around the zero at {zero}")]
    Singular { u: f64, zero: f64 },

    #[error("quadrature did not converge on [{a}, {b}] (best value {best}, error estimate {err})")]
    Quadrature {
        a: f64,
        b: f64,
        best: num_complex::Complex64,
        err: f64,
    },

    #[error("zero count is not consistent with the Riemann-von Mangoldt count: found {found}, expected {expected}")]
    CountMismatch { found: usize, expected: usize },

    #[error("requested height {requested} exceeds available data up to {available}")]
    OutOfRange { requested: f64, available: f64 },

    #[error("cache {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
