//! Numerical toolkit for critical-line integrals of the Riemann zeta function.

pub mod blaschke;
pub mod cli;
pub mod error;
pub mod line_integrals;
pub mod persist;
pub mod prime_side;
pub mod report;
pub mod special_fn;
pub mod suite;
pub mod zeros;
pub mod zeta_engine;

pub use error::{Error, Result};
pub use num_complex::Complex64;
