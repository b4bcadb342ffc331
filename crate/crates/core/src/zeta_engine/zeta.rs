use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special_fn::{log_gamma, theta_exact};

const MAX_CORRECTIONS: usize = 80;

// B_{2k}/(2k)! = (−1)^{k+1} 2ζ(2k)/(2π)^{2k}
fn em_coefficients() -> &'static [f64; MAX_CORRECTIONS] {
    static COEFFS: OnceLock<[f64; MAX_CORRECTIONS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = [0.0; MAX_CORRECTIONS];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = i + 1;
            let zeta_2k = match k {
                1 => PI.powi(2) / 6.0,
                2 => PI.powi(4) / 90.0,
                3 => PI.powi(6) / 945.0,
                4 => PI.powi(8) / 9450.0,
                _ => {
                    let e = 2 * k as i32;
                    let m = 20.0f64;
                    let mut s = 0.0;
                    for n in (1..20).rev() {
                        s += (n as f64).powi(-e);
                    }
                    s + m.powi(1 - e) / (e - 1) as f64 + 0.5 * m.powi(-e)
                }
            };
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * zeta_2k / (2.0 * PI).powi(2 * k as i32);
        }
        out
    })
}

fn check_domain(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("zeta of non-finite {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(format!("zeta requires Re(s) > 0, got {s}")));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    Ok(())
}

/// ζ(s) and ζ'(s) by Euler–Maclaurin summation with N ≈ 10 + |Im s|/π direct
/// terms; corrections are added until they drop below 1e−17 of the sum, and
/// N is doubled if the asymptotic series stalls first.
pub fn zeta_with_derivative(s: Complex64) -> Result<(Complex64, Complex64)> {
    check_domain(s)?;
    let mut n = 10 + (s.im.abs() / PI).ceil() as usize;
    loop {
        if let Some(v) = euler_maclaurin(s, n) {
            return Ok(v);
        }
        n *= 2;
    }
}

/// ζ(s) for Re(s) > 0, s ≠ 1.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    zeta_with_derivative(s).map(|(z, _)| z)
}

fn euler_maclaurin(s: Complex64, n: usize) -> Option<(Complex64, Complex64)> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let ln_k = (k as f64).ln();
        let p = (-s * ln_k).exp();
        sum += p;
        dsum -= p * ln_k;
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_s = (-s * ln_n).exp();
    let sm1 = s - 1.0;
    let tail = n_s * nf / sm1;
    sum += tail + 0.5 * n_s;
    dsum += -tail * ln_n - tail / sm1 - 0.5 * n_s * ln_n;

    // T_k = c_k s(s+1)…(s+2k−2) N^{−s−2k+1}
    let coeffs = em_coefficients();
    let mut poch = s;
    let mut dlog_poch = s.inv();
    let mut power = n_s / nf;
    let mut prev = f64::INFINITY;
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            let a = s + (2 * k - 1) as f64;
            let b = s + (2 * k) as f64;
            poch *= a * b;
            dlog_poch += a.inv() + b.inv();
            power /= nf * nf;
        }
        let term = poch * power * *c;
        sum += term;
        dsum += term * (dlog_poch - ln_n);
        let mag = term.norm();
        if mag < 1e-17 * sum.norm() {
            return Some((sum, dsum));
        }
        if mag > prev {
            return None;
        }
        prev = mag;
    }
    None
}

/// Hardy's Z(t) = e^{iϑ(t)} ζ(½ + it), real for real t.
pub fn hardy_z(t: f64) -> Result<f64> {
    let z = zeta(Complex64::new(0.5, t))?;
    let rotated = Complex64::from_polar(1.0, theta_exact(t)) * z;
    debug_assert!(rotated.im.abs() <= 1e-8 * z.norm().max(1.0), "Z({t}) not real: {rotated}");
    Ok(rotated.re)
}

/// log|ζ(½ + iu)| by direct evaluation.
pub fn log_abs_zeta_direct(u: f64) -> Result<f64> {
    let z = zeta(Complex64::new(0.5, u.abs()))?;
    let m = z.norm();
    if m == 0.0 {
        return Err(Error::Domain(format!("ζ(½ + i{u}) vanishes to double precision")));
    }
    Ok(m.ln())
}

/// ξ(s) = s(s−1)/2 · π^{−s/2} Γ(s/2) ζ(s), with ξ(1) = ½.
pub fn xi(s: Complex64) -> Result<Complex64> {
    if s.re == 1.0 && s.im == 0.0 {
        return Ok(Complex64::new(0.5, 0.0));
    }
    let z = zeta(s)?;
    let g = (log_gamma(s / 2.0)? - s / 2.0 * PI.ln()).exp();
    Ok(s * (s - 1.0) / 2.0 * g * z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn reference_values() {
        let cases = [
            (c(2.0, 0.0), c(PI * PI / 6.0, 0.0), 1e-14),
            (c(3.0, 0.0), c(1.202_056_903_159_594_3, 0.0), 1e-14),
            (c(0.5, 0.0), c(-1.460_354_508_809_586_8, 0.0), 1e-13),
            (c(1.5, 10.0), c(1.278_391_166_434_759_7, -0.095_724_055_986_708_85), 1e-12),
            (c(0.5, 5.0), c(0.701_812_371_165_686_6, 0.231_038_008_391_419_93), 1e-12),
            (c(0.7, 30.0), c(0.145_666_736_937_242_72, -0.547_035_630_723_602_5), 1e-11),
            (c(0.5, 1000.0), c(0.356_334_367_194_396_05, 0.931_997_831_232_993_7), 1e-10),
            (c(0.5, 4000.0), c(0.017_285_816_082_224_78, -0.044_615_914_646_171_75), 1e-8),
        ];
        for (s, want, tol) in cases {
            let got = zeta(s).unwrap();
            assert!(rel(got, want) < tol, "zeta({s}) = {got}, want {want}");
        }
    }

    #[test]
    fn eta_consistency() {
        // alternating series accelerated by averaging partial sums
        let s = c(1.5, 10.0);
        let n = 4000;
        let mut partial = Vec::with_capacity(n + 1);
        let mut acc = c(0.0, 0.0);
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * (-s * (k as f64).ln()).exp();
            partial.push(acc);
        }
        // repeated averaging (Euler transform) on the last 30 partial sums
        let mut v: Vec<Complex64> = partial[n - 30..].to_vec();
        while v.len() > 1 {
            v = v.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        }
        let eta = v[0];
        let factor = c(1.0, 0.0) - (c(1.0, 0.0) - s).exp2();
        let lhs = zeta(s).unwrap() * factor;
        assert!((lhs - eta).norm() < 1e-9, "{lhs} vs {eta}");
    }

    #[test]
    fn logarithmic_derivative_at_two() {
        let (z, dz) = zeta_with_derivative(c(2.0, 0.0)).unwrap();
        assert!((-dz / z - 0.569_960_993_094_532_8).norm() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(zeta(c(1.0, 0.0)).is_err());
        assert!(zeta(c(0.0, 3.0)).is_err());
        assert!(zeta(c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn hardy_z_properties() {
        assert!((hardy_z(0.0).unwrap() + 1.460_354_508_809_586_8).abs() < 1e-13);
        for t in [5.0, 10.0, 25.0] {
            let z = zeta(c(0.5, t)).unwrap().norm();
            assert!((hardy_z(t).unwrap().abs() - z).abs() < 1e-10);
        }
        assert!(hardy_z(14.0).unwrap() * hardy_z(14.2).unwrap() < 0.0);
    }

    #[test]
    fn xi_values_and_symmetry() {
        assert!((xi(c(2.0, 0.0)).unwrap() - PI / 6.0).norm() < 1e-14);
        assert_eq!(xi(c(1.0, 0.0)).unwrap(), c(0.5, 0.0));
        let s = c(0.7, 3.0);
        assert!((xi(s).unwrap() - xi(c(1.0, 0.0) - s).unwrap()).norm() < 1e-9);
        assert!(xi(c(0.5, 5.0)).unwrap().im.abs() < 1e-9);
    }
}
