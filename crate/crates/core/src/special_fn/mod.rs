//! Scalar special functions: Γ, Ei, Ei₀, Li, the phase function ϑ, and the
//! φ_α / Φ_α / Θ / K building blocks of the explicit formulas.

mod expint;
mod gamma;
mod kernels;
mod theta;

pub use expint::{ei, ei0, li};
pub use gamma::{euler_gamma, log_gamma, EULER_GAMMA};
pub use kernels::{expm1, kernel_k, phi2, phi_alpha, phi_big, phi_big_log, phi_tilde, theta_big, DIAGONAL_RADIUS};
pub use theta::{theta_asymptotic, theta_exact};
