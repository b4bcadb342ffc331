use num_complex::Complex64;

use crate::error::{Error, Result};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

// B_{2k} / (2k (2k-1)) for the Stirling series.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// log Γ(s) on the branch that is real on the positive axis and continuous
/// off the negative axis (the usual `loggamma`).
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {s}")));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole(format!("Gamma has a pole at {}", s.re)));
    }
    // Recurrence up to Re z >= 15, then Stirling.
    let mut z = s;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < 15.0 {
        shift += z.ln();
        z += 1.0;
    }
    let zinv = z.inv();
    let zinv2 = zinv * zinv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut p = zinv;
    for c in STIRLING {
        corr += p * c;
        p *= zinv2;
    }
    let half_ln_2pi = 0.918_938_533_204_672_8;
    Ok((z - 0.5) * z.ln() - z + half_ln_2pi + corr - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn closed_forms() {
        assert_abs_diff_eq!(log_gamma(c(1.0, 0.0)).unwrap().norm(), 0.0, epsilon = 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(half.re, 0.5 * std::f64::consts::PI.ln(), epsilon = 1e-14);
        assert_abs_diff_eq!(half.im, 0.0);
        assert_abs_diff_eq!(log_gamma(c(5.0, 0.0)).unwrap().re, 24f64.ln(), epsilon = 1e-13);
    }

    #[test]
    fn complex_values_against_reference() {
        // mpmath loggamma
        let v = log_gamma(c(0.25, 10.0)).unwrap();
        assert_abs_diff_eq!(v.re, -15.364_592_760_295_24, epsilon = 1e-11);
        assert_abs_diff_eq!(v.im, 12.634_193_666_938_486, epsilon = 1e-11);
        let w = log_gamma(c(-2.5, 0.3)).unwrap();
        assert_abs_diff_eq!(w.re, -0.432_088_892_613_201_9, epsilon = 1e-12);
        assert_abs_diff_eq!(w.im, -9.093_345_421_289_742, epsilon = 1e-12);
    }

    #[test]
    fn poles_rejected() {
        assert!(log_gamma(c(0.0, 0.0)).is_err());
        assert!(log_gamma(c(-3.0, 0.0)).is_err());
    }

    #[test]
    fn gamma_product_limit() {
        // exp(-γ) = Π_{k ≤ n} (1 + 1/k) e^{-1/k}
        let mut acc = 0.0;
        for k in 1..=1_000_000u32 {
            let k = k as f64;
            acc += (1.0 / k).ln_1p() - 1.0 / k;
        }
        assert_abs_diff_eq!(acc.exp(), (-EULER_GAMMA).exp(), epsilon = 1e-6);
    }
}
