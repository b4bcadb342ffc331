use std::f64::consts::PI;

use super::gamma::EULER_GAMMA;
use crate::error::{domain, Result};

// Terms summed directly before the Euler–Maclaurin tail takes over.
const DIRECT_TERMS: usize = 40;

// B_{2j} / (2j)!
const EM_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
];

/// The phase function ϑ(t) = −arctan 2t − (t/2)(γ + log π) + Σ_k {t/(2k) − arctan(t/(2k+½))}.
///
/// The series is summed directly for k < 40; the remainder is the closed-form
/// integral of the summand plus Euler–Maclaurin corrections, which is accurate
/// uniformly in t. Odd by construction.
pub fn theta_exact(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let sign = t.signum();
    let t = t.abs();
    let mut sum = -(2.0 * t).atan() - 0.5 * t * (EULER_GAMMA + PI.ln());
    for k in 1..DIRECT_TERMS {
        let k = k as f64;
        sum += t / (2.0 * k) - (t / (2.0 * k + 0.5)).atan();
    }
    sign * (sum + tail(t, DIRECT_TERMS as f64))
}

fn summand(t: f64, k: f64) -> f64 {
    t / (2.0 * k) - (t / (2.0 * k + 0.5)).atan()
}

// n-th derivative in k of the summand.
fn summand_derivative(t: f64, k: f64, n: i32) -> f64 {
    let mut fact_n = 1.0;
    for i in 2..=n {
        fact_n *= i as f64;
    }
    let fact_nm1 = fact_n / n as f64;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let first = 0.5 * t * sign * fact_n / k.powi(n + 1);
    let w = num_complex::Complex64::new(2.0 * k + 0.5, t);
    let second = 2f64.powi(n) * (-sign * fact_nm1 / w.powi(n)).im;
    first - second
}

fn tail(t: f64, k: f64) -> f64 {
    let a = 2.0 * k + 0.5;
    let integral =
        -0.5 * t - 0.5 * t * (2.0 * k).ln() + 0.5 * a * (t / a).atan() + 0.25 * t * (a * a + t * t).ln();
    let mut s = integral + 0.5 * summand(t, k);
    for (j, c) in EM_COEFFS.iter().enumerate() {
        s -= c * summand_derivative(t, k, 2 * j as i32 + 1);
    }
    s
}

/// Leading asymptotic form (t/2) log(t/2π) − t/2 − π/8, for t > 2π.
pub fn theta_asymptotic(t: f64) -> Result<f64> {
    if !(t > 2.0 * PI) {
        return domain(format!("theta_asymptotic requires t > 2π, got {t}"));
    }
    Ok(0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0)
}
