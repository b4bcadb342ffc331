use std::f64::consts::PI;

use num_complex::Complex64;

use super::expint::ei0;
use super::gamma::EULER_GAMMA;
use crate::error::{domain, Result};

/// Switch radius for the removable singularities of Θ and K.
pub const DIAGONAL_RADIUS: f64 = 1e-8;

/// e^z − 1 without cancellation near z = 0.
pub fn expm1(z: Complex64) -> Complex64 {
    let (a, b) = (z.re, z.im);
    let s = (0.5 * b).sin();
    Complex64::new(a.exp_m1() * b.cos() - 2.0 * s * s, a.exp() * b.sin())
}

/// (e^z − 1 − z)/z², continued analytically to z = 0.
pub fn phi2(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        // Σ z^k/(k+2)!
        let mut term = Complex64::new(0.5, 0.0);
        let mut sum = term;
        for k in 1..24 {
            term *= z / (k as f64 + 2.0);
            sum += term;
        }
        sum
    } else {
        (expm1(z) - z) / (z * z)
    }
}

fn check_x(x: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return domain(format!("x must exceed 1, got {x}"));
    }
    Ok(x.ln())
}

fn on_positive_ray(alpha: Complex64) -> bool {
    alpha.im == 0.0 && alpha.re >= 0.0
}

/// φ_α(x) = γ + log log x + log(−α) + Ei₀(α log x), principal branch.
pub fn phi_alpha(alpha: Complex64, x: f64) -> Result<Complex64> {
    let l = check_x(x)?;
    if on_positive_ray(alpha) {
        return domain(format!("phi_alpha: alpha = {alpha} lies on [0, ∞)"));
    }
    Ok(EULER_GAMMA + l.ln() + (-alpha).ln() + ei0(alpha * l))
}

fn require_off_axis(alpha: Complex64) -> Result<()> {
    if alpha.im == 0.0 {
        return domain(format!("alpha = {alpha} must have nonzero imaginary part"));
    }
    Ok(())
}

/// Φ_α(x) = x·φ_{α−1}(x) − φ_α(x) + x[log(−α) − log(1−α)].
///
/// Evaluated in the regrouped form
/// (x−1)(γ + log log x + log(−α)) + x·Ei₀((α−1) log x) − Ei₀(α log x),
/// which stays accurate as x → 1.
pub fn phi_big(alpha: Complex64, x: f64) -> Result<Complex64> {
    let l = check_x(x)?;
    phi_big_log(alpha, l)
}

/// Φ_α(e^l), taking l = log x directly (no rounding of x near 1).
pub fn phi_big_log(alpha: Complex64, l: f64) -> Result<Complex64> {
    if !(l > 0.0) || !l.is_finite() {
        return domain(format!("log x must be positive, got {l}"));
    }
    require_off_axis(alpha)?;
    Ok(l.exp_m1() * (EULER_GAMMA + l.ln() + (-alpha).ln()) + l.exp() * ei0((alpha - 1.0) * l)
        - ei0(alpha * l))
}

/// Φ̃_α(x) = x·φ_{α−1}(x) − φ_α(x).
pub fn phi_tilde(alpha: Complex64, x: f64) -> Result<Complex64> {
    let big = phi_big(alpha, x)?;
    Ok(big - x * ((-alpha).ln() - (1.0 - alpha).ln()))
}

/// Θ(x, α) = −(x^α − 1)/α + Ei₀(α log x)·log x, with Θ(x, 0) = −log x.
pub fn theta_big(x: f64, alpha: Complex64) -> Result<Complex64> {
    let l = check_x(x)?;
    if alpha.norm() < DIAGONAL_RADIUS {
        return Ok(-l + alpha * l * l / 2.0 + alpha * alpha * l * l * l / 12.0);
    }
    let z = alpha * l;
    Ok(-expm1(z) / alpha + ei0(z) * l)
}

/// K(x, r, u) = (1/π)[(x^β − 1)/β² − log x/β], β = ½ + iu − r, with the
/// diagonal value log²x/(2π) at β = 0.
pub fn kernel_k(x: f64, r: Complex64, u: f64) -> Result<Complex64> {
    let l = check_x(x)?;
    let beta = Complex64::new(0.5 - r.re, u - r.im);
    let scale = l * l / PI;
    if beta.norm() < DIAGONAL_RADIUS {
        return Ok(scale * 0.5 * (1.0 + beta * l / 3.0));
    }
    Ok(scale * phi2(beta * l))
}
