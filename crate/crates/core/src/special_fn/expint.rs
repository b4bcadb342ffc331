use num_complex::Complex64;

use super::gamma::EULER_GAMMA;
use crate::error::{domain, Result};

/// Radius inside which the Taylor series of Ei₀ is always used. Beyond it the
/// series is still used close to the positive axis, where the result is of the
/// same size as the largest term.
const SERIES_RADIUS: f64 = 12.0;
const SERIES_MAX: f64 = 700.0;

/// Entire part of the exponential integral, Σ z^k / (k·k!).
pub fn ei0(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r <= SERIES_RADIUS || (r - z.re <= SERIES_RADIUS && r <= SERIES_MAX) {
        ei0_series(z)
    } else if z.re > SERIES_MAX - SERIES_RADIUS {
        ei0_asymptotic(z)
    } else {
        // Ei₀(z) = −E₁(−z) − γ − log(−z); the branch cuts cancel.
        let w = -z;
        -e1_continued_fraction(w) - EULER_GAMMA - w.ln()
    }
}

fn ei0_series(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let r = z.norm();
    let mut k = 1.0;
    loop {
        term *= z / k;
        let add = term / k;
        sum += add;
        if k > r && add.norm() <= 1e-17 * sum.norm() {
            break;
        }
        if k > 4.0 * r + 200.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

fn ei0_asymptotic(z: Complex64) -> Complex64 {
    let zi = z.inv();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 1.0;
    while k < 60.0 {
        let next = term * zi * k;
        if next.norm() > term.norm() {
            break;
        }
        term = next;
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
        k += 1.0;
    }
    z.exp() * zi * sum - EULER_GAMMA - z.ln()
}

/// E₁(w) by the even continued fraction (modified Lentz), valid off the
/// negative axis for |w| not small.
fn e1_continued_fraction(w: Complex64) -> Complex64 {
    let tiny = 1e-300;
    let mut b = w + 1.0;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..20_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = (d * an + b).inv();
        c = b + c.inv() * an;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h * (-w).exp()
}

/// Real exponential integral Ei(x) = γ + log x + Ei₀(x) for x > 0.
pub fn ei(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("ei requires x > 0, got {x}"));
    }
    let v = EULER_GAMMA + x.ln() + ei0(Complex64::new(x, 0.0)).re;
    // e^x/x overflows beyond x ≈ 716
    Ok(if v.is_nan() && x > 700.0 { f64::INFINITY } else { v })
}

/// Logarithmic integral Li(x) = Ei(log x) for x > 1.
pub fn li(x: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return domain(format!("li requires x > 1, got {x}"));
    }
    ei(x.ln())
}
