//! Half-line integrals over critical-line data and the identities they
//! satisfy. Every result carries a quadrature error and a truncation tail.

use std::f64::consts::{E, PI};
use std::time::Instant;

use num_complex::Complex64;

use super::lines::{CriticalLine, RelocationLine, ZetaLine};
use super::quadrature::{integrate_to_infinity, HalfLine, QuadValue, QuadratureSpec};
use crate::blaschke::{
    blaschke_b, blaschke_log_derivative, c_log_derivative, c_product, f12_sum, f22_sum, f_rho_pair,
    n3_and_nb, theorem34_zero_sum, SyntheticZeroSet,
};
use crate::error::{Error, Result};
use crate::prime_side::{pi_star_r, pi_star_r_log_integral, psi_r, MangoldtTable};
use crate::report::VerificationRecord;
use crate::special_fn::{kernel_k, log_gamma, theta_big, theta_exact, EULER_GAMMA};

/// Smallest distance between t and a zero ordinate accepted by n2.
pub const MIN_GAP_DISTANCE: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineEstimate<V> {
    pub value: V,
    pub err: f64,
    pub tail: f64,
}

impl<V> LineEstimate<V> {
    /// err + tail.
    pub fn uncertainty(&self) -> f64 {
        self.err + self.tail
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tail_spec() -> QuadratureSpec {
    QuadratureSpec { abs_tol: 1e-15, rel_tol: 1e-6, ..QuadratureSpec::default() }
}

fn require_right_of_line(s: Complex64) -> Result<()> {
    if !(s.re > 0.5) {
        return Err(Error::Domain(format!("Re(s) must exceed ½, got {s}")));
    }
    Ok(())
}

/// ∫₀^H k(u)·log|F(½+iu)| du; the tail integrates |k|-envelope × log envelope
/// from H to ∞.
pub fn log_integral<L, V, K, Env>(
    line: &L,
    spec: &QuadratureSpec,
    kernel: K,
    envelope: Env,
    omega: Option<f64>,
    extra_log_points: &[f64],
) -> Result<LineEstimate<V>>
where
    L: CriticalLine + ?Sized,
    V: QuadValue,
    K: Fn(f64) -> V + Sync,
    Env: Fn(f64) -> f64 + Sync,
{
    let h = line.height();
    let mut half = HalfLine::new(0.0, h)
        .log_points(line.log_singularities())
        .log_points(extra_log_points)
        .max_panel(line.max_panel());
    if spec.osc_split {
        if let Some(w) = omega {
            half = half.oscillation(w);
        }
    }
    let est = half.integrate(spec, |u| kernel(u) * line.log_abs(u))?;
    let tail = integrate_to_infinity(&tail_spec(), h, |u| envelope(u) * line.log_envelope(u))
        .map(|e| e.value.abs() + e.err)
        .unwrap_or(f64::INFINITY);
    Ok(LineEstimate { value: est.value, err: est.err, tail })
}

fn sup_u2(envelope: &impl Fn(f64) -> f64, h: f64) -> f64 {
    [1.0, 1.5, 2.0, 4.0, 16.0].iter().map(|&k| (k * h) * (k * h) * envelope(k * h)).fold(0.0, f64::max)
}

/// ∫₀^H k(u)·R(u) du with R the phase residual.
pub fn residual_integral<L, V, K, Env>(
    line: &L,
    spec: &QuadratureSpec,
    kernel: K,
    envelope: Env,
    omega: Option<f64>,
) -> Result<LineEstimate<V>>
where
    L: CriticalLine + ?Sized,
    V: QuadValue,
    K: Fn(f64) -> V + Sync,
    Env: Fn(f64) -> f64,
{
    let h = line.height();
    let mut half = HalfLine::new(0.0, h).jumps(line.jumps()).max_panel(line.max_panel());
    if spec.osc_split {
        if let Some(w) = omega {
            half = half.oscillation(w);
        }
    }
    let est = half.integrate(spec, |u| kernel(u) * line.phase_residual(u))?;
    Ok(LineEstimate { value: est.value, err: est.err, tail: line.residual_tail(sup_u2(&envelope, h)) })
}

/// K_C(s, u) = (2/π) s(s−1) u / ((u² + (s−½)²)(u² + ¼)).
pub fn k_c(s: Complex64, u: f64) -> Complex64 {
    let a = s - 0.5;
    2.0 / PI * s * (s - 1.0) * u / ((u * u + a * a) * (u * u + 0.25))
}

fn k_c_envelope(s: Complex64) -> impl Fn(f64) -> f64 {
    let a = s - 0.5;
    move |u: f64| 2.0 / PI * (s * (s - 1.0)).norm() * u / ((u * u + a * a).norm() * (u * u + 0.25))
}

/// Ω = (1/π)∫₀^H log|F(½+iu)|/(u²+¼) du.
pub fn omega<L: CriticalLine + ?Sized>(line: &L, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let k = |u: f64| 1.0 / (PI * (u * u + 0.25));
    log_integral(line, spec, k, k, None, &[])
}

/// Ω_ζ for the zeta line.
pub fn omega_zeta(line: &ZetaLine<'_>, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    omega(line, spec)
}

/// (2/π)(s−½)∫₀^H log|F(½+iu)|/(u²+(s−½)²) du = log ζ_B(s) for the zeta line.
pub fn log_zeta_b<L: CriticalLine + ?Sized>(
    line: &L,
    s: Complex64,
    spec: &QuadratureSpec,
) -> Result<LineEstimate<Complex64>> {
    require_right_of_line(s)?;
    let a = s - 0.5;
    let k = move |u: f64| 2.0 / PI * a / (u * u + a * a);
    let env = move |u: f64| 2.0 / PI * a.norm() / (u * u + a * a).norm();
    log_integral(line, spec, k, env, None, &[])
}

/// s(s−1)(2/π)∫₀^H u·R(u)/((u²+(s−½)²)(u²+¼)) du = log ζ_C(s) for the zeta line.
pub fn log_zeta_c<L: CriticalLine + ?Sized>(
    line: &L,
    s: Complex64,
    spec: &QuadratureSpec,
) -> Result<LineEstimate<Complex64>> {
    require_right_of_line(s)?;
    residual_integral(line, spec, move |u| k_c(s, u), k_c_envelope(s), None)
}

fn exp_estimate(log: LineEstimate<Complex64>) -> LineEstimate<Complex64> {
    let value = log.value.exp();
    let spread = |d: f64| value.norm() * d.exp_m1();
    LineEstimate { value, err: spread(log.err), tail: spread(log.tail) }
}

/// ζ_B(s) = exp[(2/π)(s−½)∫ log|ζ(½+iu)|/(u²+(s−½)²) du].
pub fn zeta_b_eval(line: &ZetaLine<'_>, s: Complex64, spec: &QuadratureSpec) -> Result<LineEstimate<Complex64>> {
    Ok(exp_estimate(log_zeta_b(line, s, spec)?))
}

/// ζ_C(s) = exp[s(s−1)(2/π)∫ u(πN − ϑ − 2arctan 2u)/((u²+(s−½)²)(u²+¼)) du].
pub fn zeta_c_eval(line: &ZetaLine<'_>, s: Complex64, spec: &QuadratureSpec) -> Result<LineEstimate<Complex64>> {
    Ok(exp_estimate(log_zeta_c(line, s, spec)?))
}

/// J₁ = −(1/π)∫₀^H log|F(½+iu)|/(u²+¼)² du.
pub fn j1<L: CriticalLine + ?Sized>(line: &L, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let k = |u: f64| -1.0 / (PI * (u * u + 0.25).powi(2));
    log_integral(line, spec, k, move |u| k(u).abs(), None, &[])
}

/// J₂ = (2/π)∫₀^H u·R(u)/(u²+¼)² du.
pub fn j2<L: CriticalLine + ?Sized>(line: &L, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let k = |u: f64| 2.0 / PI * u / (u * u + 0.25).powi(2);
    residual_integral(line, spec, k, k, None)
}

/// (J₁, J₂) for the zeta line.
pub fn j1_j2(line: &ZetaLine<'_>, spec: &QuadratureSpec) -> Result<(LineEstimate<f64>, LineEstimate<f64>)> {
    Ok((j1(line, spec)?, j2(line, spec)?))
}

fn check_x(x: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("x must exceed 1, got {x}")));
    }
    Ok(x.ln())
}

/// f₁₁(x) = (2√x/π)∫₀^H R(u)/(u²+¼)·sin(u log x) du.
pub fn f11<L: CriticalLine + ?Sized>(line: &L, x: f64, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let l = check_x(x)?;
    let amp = 2.0 * x.sqrt() / PI;
    let k = move |u: f64| amp * (u * l).sin() / (u * u + 0.25);
    residual_integral(line, spec, k, move |u| amp / (u * u + 0.25), Some(l))
}

/// f₂₁(x) = −(2√x/π)∫₀^H log|F(½+iu)|/(u²+¼)·cos(u log x) du.
pub fn f21<L: CriticalLine + ?Sized>(line: &L, x: f64, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let l = check_x(x)?;
    let amp = 2.0 * x.sqrt() / PI;
    let k = move |u: f64| -amp * (u * l).cos() / (u * u + 0.25);
    log_integral(line, spec, k, move |u| amp / (u * u + 0.25), Some(l), &[])
}

/// N₁(t) = (ϑ(t) + 2 arctan 2t)/π.
pub fn n1(t: f64) -> f64 {
    (theta_exact(t) + 2.0 * (2.0 * t).atan()) / PI
}

/// I(t) = ∫₀^H log|1 − t²/u²|·log|F(½+iu)| du.
fn n2_inner<L: CriticalLine + ?Sized>(line: &L, t: f64, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    let k = move |u: f64| (1.0 - (t / u) * (t / u)).abs().ln();
    let env = move |u: f64| 2.0 * t * t / (u * u - t * t);
    log_integral(line, spec, k, env, None, &[0.0, t])
}

/// N₂(t) = −(1/2π²) d/dt ∫_ℝ log|1 − t²/u²| log|F(½+iu)| du, folded to the
/// half line, by central differences with step h and h/2 and one
/// Richardson step.
pub fn n2<L: CriticalLine + ?Sized>(line: &L, t: f64, h: f64, spec: &QuadratureSpec) -> Result<LineEstimate<f64>> {
    if !(1e-4..=1e-2).contains(&h) {
        return Err(Error::Domain(format!("difference step must lie in [1e-4, 1e-2], got {h}")));
    }
    if !(t > 0.0) || t + h >= line.height() {
        return Err(Error::Domain(format!("N₂ needs 0 < t < truncation height, got {t}")));
    }
    let near = line
        .log_singularities()
        .iter()
        .map(|&z| (z - t).abs())
        .fold(f64::INFINITY, f64::min);
    if near < MIN_GAP_DISTANCE {
        return Err(Error::Domain(format!("t = {t} lies within {near:.3} of a zero ordinate")));
    }
    let d = |step: f64| -> Result<(f64, f64)> {
        let hi = n2_inner(line, t + step, spec)?;
        let lo = n2_inner(line, t - step, spec)?;
        Ok(((hi.value - lo.value) / (2.0 * step), (hi.err + lo.err) / (2.0 * step)))
    };
    let (d1, e1) = d(h)?;
    let (d2, e2) = d(0.5 * h)?;
    let deriv = (4.0 * d2 - d1) / 3.0;
    let err = (4.0 * e2 + e1) / 3.0 + (d2 - d1).abs() / 3.0;
    // d/dt of the truncated part: ∫_H^∞ 2t/(u² − t²)·|log F| du
    let tail = integrate_to_infinity(&tail_spec(), line.height(), |u| 2.0 * t / (u * u - t * t) * line.log_envelope(u))
        .map(|e| e.value + e.err)
        .unwrap_or(f64::INFINITY);
    let scale = 1.0 / (PI * PI);
    Ok(LineEstimate { value: -scale * deriv, err: scale * err, tail: scale * tail })
}

/// N(t) − N₁(t) − N₂(t) against N_B(t) + N₃(t) = 0 for the zeta line.
pub fn decomposition_check(
    line: &ZetaLine<'_>,
    t: f64,
    h: f64,
    spec: &QuadratureSpec,
    tolerance: f64,
) -> VerificationRecord {
    let start = Instant::now();
    let id = format!("thm25.t{t}");
    match n2(line, t, h, spec) {
        Ok(n2v) => {
            let n = line.count(t);
            VerificationRecord::real(id, n, n1(t) + n2v.value, tolerance, n2v.uncertainty())
                .with_note(format!("N={n}, N2={:.6}", n2v.value))
                .timed(start)
        }
        Err(e) => VerificationRecord::failed(id, e).timed(start),
    }
}

/// ∫₀^H (K(x,r,u) + K(x,r,−u))·log|F(½+iu)| du.
pub fn theorem34_integral<L: CriticalLine + ?Sized>(
    line: &L,
    x: f64,
    r: Complex64,
    spec: &QuadratureSpec,
) -> Result<LineEstimate<Complex64>> {
    let l = check_x(x)?;
    let b = c(0.5, 0.0) - r;
    let k = move |u: f64| {
        let nan = c(f64::NAN, 0.0);
        kernel_k(x, r, u).unwrap_or(nan) + kernel_k(x, r, -u).unwrap_or(nan)
    };
    let env = move |u: f64| (2.0 * (x.powf(b.re) + 1.0) + 2.0 * l * b.norm()) / (PI * u * u);
    log_integral(line, spec, k, env, Some(l), &[])
}

/// The Θ explicit formula for the zeta line with no off-line zeros, plus the exact first
/// equality ∫₁ˣ π_{*,r}(y)/y dy = π_{*,r}(x) log x − ψ_r(x).
pub fn theorem34_check(
    line: &ZetaLine<'_>,
    x: f64,
    r: Complex64,
    tab: &MangoldtTable,
    spec: &QuadratureSpec,
    tolerance: f64,
) -> Vec<VerificationRecord> {
    let start = Instant::now();
    let id = format!("thm34.x{x}.r{}", crate::report::format_short(r));
    let run = || -> Result<Vec<VerificationRecord>> {
        let l = check_x(x)?;
        let lhs = pi_star_r(x, r, tab)? * l - psi_r(x, r, tab)?;
        let integral = theorem34_integral(line, x, r, spec)?;
        let rhs = theta_big(x, 1.0 - r)? - theta_big(x, -r)? + integral.value;
        let main = VerificationRecord::new(id.clone(), lhs, rhs, tolerance, integral.uncertainty()).timed(start);
        let t1 = Instant::now();
        let first = pi_star_r_log_integral(x, r, tab)?;
        let eq = VerificationRecord::new(format!("{id}.first_equality"), first, lhs, 1e-8, 0.0).timed(t1);
        Ok(vec![main, eq])
    };
    run().unwrap_or_else(|e| vec![VerificationRecord::failed(id, e).timed(start)])
}

/// ½·exp[∫₀^H πN(u) K_C(s,u) du] with N from the zero table.
pub fn xi_poisson(line: &ZetaLine<'_>, s: Complex64, spec: &QuadratureSpec) -> Result<LineEstimate<Complex64>> {
    require_right_of_line(s)?;
    let h = line.height();
    let est = HalfLine::new(0.0, h)
        .jumps(line.jumps())
        .integrate(spec, |u| k_c(s, u) * (PI * line.count(u)))?;
    // ∫_H^∞ πN|K_C| with N(u) ≈ (u/2π) log(u/2π)
    let delta = (s * (s - 1.0)).norm() / PI * ((h / (2.0 * PI)).ln() + 1.0) / h;
    let value = 0.5 * est.value.exp();
    Ok(LineEstimate { value, err: value.norm() * est.err.exp_m1(), tail: value.norm() * delta.exp_m1() })
}

/// ∫₀^∞ f over a rational-kernel integrand: panels on [0, split] then the
/// mapped remainder.
fn to_infinity<V: QuadValue, F: Fn(f64) -> V + Sync>(
    spec: &QuadratureSpec,
    lower: f64,
    split: f64,
    omega: Option<f64>,
    f: F,
) -> Result<(V, f64)> {
    let mut half = HalfLine::new(lower, split).max_panel(1.0);
    if let Some(w) = omega {
        half = half.oscillation(w);
    }
    let a = half.integrate(spec, &f)?;
    let b = integrate_to_infinity(spec, split, &f)?;
    Ok((a.value + b.value, a.err + b.err))
}

/// exp[∫ ϑ(u) K_C(s,u) du] = Γ(s/2) π^{−s/2}.
pub fn gamma_kernel_identity(s: Complex64, spec: &QuadratureSpec) -> VerificationRecord {
    let start = Instant::now();
    let id = format!("kernels.thetaKC.s{}", crate::report::format_short(s));
    let run = || -> Result<VerificationRecord> {
        require_right_of_line(s)?;
        let (i, err) = to_infinity(spec, 0.0, 64.0, None, |u| k_c(s, u) * theta_exact(u))?;
        let lhs = i.exp();
        let rhs = (log_gamma(s / 2.0)? - s / 2.0 * PI.ln()).exp();
        Ok(VerificationRecord::new(id.clone(), lhs, rhs, 1e-6, lhs.norm() * err.exp_m1()))
    };
    run().unwrap_or_else(|e| VerificationRecord::failed(id.clone(), e)).timed(start)
}

/// exp[∫ 2 arctan(2u) K_C(s,u) du] = s².
pub fn atan_kernel_identity(s: Complex64, spec: &QuadratureSpec) -> VerificationRecord {
    let start = Instant::now();
    let id = format!("kernels.atanKC.s{}", crate::report::format_short(s));
    let run = || -> Result<VerificationRecord> {
        require_right_of_line(s)?;
        let (i, err) = to_infinity(spec, 0.0, 64.0, None, |u| k_c(s, u) * (2.0 * (2.0 * u).atan()))?;
        let lhs = i.exp();
        Ok(VerificationRecord::new(id.clone(), lhs, s * s, 1e-6, lhs.norm() * err.exp_m1()))
    };
    run().unwrap_or_else(|e| VerificationRecord::failed(id.clone(), e)).timed(start)
}

/// Complex arctangent, principal branch.
fn atan_c(z: Complex64) -> Complex64 {
    let i = c(0.0, 1.0);
    0.5 * i * ((1.0 - i * z).ln() - (1.0 + i * z).ln())
}

/// One point of the calibration grid.
#[derive(Clone, Copy, Debug)]
pub struct CalibrationPoint {
    pub s: Complex64,
    pub alpha: f64,
    pub u: f64,
    pub a: Complex64,
}

/// Twenty (s, α, u, a) combinations covering real and complex s near and far
/// from the line, α from 0 past the first zero, and several frequencies.
pub fn calibration_grid() -> Vec<CalibrationPoint> {
    let ss = [c(1.0, 0.0), c(2.0, 0.0), c(1.5, 3.0), c(0.75, 1.0), c(3.0, -2.0)];
    let alphas = [0.0, 0.5, 2.0, 14.134_725];
    let us = [0.5, 3.0, 10.0, 1.0];
    let as_ = [c(0.5, 0.0), c(1.0, 0.0), c(2.0, 1.0), c(0.25, -0.5)];
    let mut out = Vec::with_capacity(20);
    for (i, &s) in ss.iter().enumerate() {
        for j in 0..4 {
            out.push(CalibrationPoint { s, alpha: alphas[(i + j) % 4], u: us[(i + 2 * j) % 4], a: as_[(i * 3 + j) % 4] });
        }
    }
    out
}

/// Closed-form identities of the K_C kernel and the Mellin sine/cosine
/// transforms, to 1e−9 over the calibration grid.
pub fn calibration_battery(spec: &QuadratureSpec) -> Vec<VerificationRecord> {
    let spec = QuadratureSpec { abs_tol: spec.abs_tol.min(1e-12), rel_tol: spec.rel_tol.min(1e-12), ..*spec };
    let mut out = Vec::new();
    for (k, p) in calibration_grid().into_iter().enumerate() {
        let CalibrationPoint { s, alpha, u, a } = p;
        let tag = |name: &str| format!("kernels.{name}.{k:02}");
        let record = |name: &str, r: Result<(Complex64, Complex64, f64)>| match r {
            Ok((lhs, rhs, err)) => VerificationRecord::new(tag(name), lhs, rhs, 1e-9, err),
            Err(e) => VerificationRecord::failed(tag(name), e),
        };
        let t0 = Instant::now();
        out.push(
            record("quadfactor", (|| {
                let (i, err) = to_infinity(&spec, alpha, alpha + 64.0, None, |v| k_c(s, v))?;
                let lhs = (PI * i).exp();
                let rhs = (1.0 - s / c(0.5, alpha)) * (1.0 - s / c(0.5, -alpha));
                Ok((lhs, rhs, lhs.norm() * (PI * err).exp_m1()))
            })())
            .timed(t0),
        );
        let t0 = Instant::now();
        out.push(
            record("gammafactor", (|| {
                let (i, err) = to_infinity(&spec, 0.0, 64.0, None, |v| k_c(s, v) * atan_c(c(v, 0.0) / a))?;
                let lhs = i.exp();
                Ok((lhs, 1.0 + (s - 1.0) / (a + 0.5), lhs.norm() * err.exp_m1()))
            })())
            .timed(t0),
        );
        let t0 = Instant::now();
        out.push(
            record("sminus1", (|| {
                let (i, err) = to_infinity(&spec, 0.0, 64.0, None, |v| k_c(s, v) * v)?;
                Ok((i, s - 1.0, err))
            })())
            .timed(t0),
        );
        // x = e^v: ∫₁^∞ √x sin(u log x) x^{−s−1} dx = ∫₀^∞ e^{−(s−½)v} sin(uv) dv
        let decay = s - 0.5;
        let big_v = 40.0 / decay.re;
        let laplace = |g: &(dyn Fn(f64) -> f64 + Sync)| -> Result<(Complex64, f64)> {
            let est = HalfLine::new(0.0, big_v)
                .oscillation(u)
                .max_panel(1.0)
                .integrate(&spec, |v| (-decay * v).exp() * g(v))?;
            Ok((est.value, est.err + (-decay.re * big_v).exp() / decay.re))
        };
        let t0 = Instant::now();
        out.push(
            record("sinlogint", (|| {
                let (i, err) = laplace(&|v| (u * v).sin())?;
                Ok((i, u / (u * u + decay * decay), err))
            })())
            .timed(t0),
        );
        let t0 = Instant::now();
        out.push(
            record("expzb4", (|| {
                let (i, err) = laplace(&|v| (u * v).cos())?;
                Ok((i, decay / (u * u + decay * decay), err))
            })())
            .timed(t0),
        );
    }
    out
}

/// Identities for a zero relocation ζ → ζ·G, where G swaps on-line zeros
/// for the synthetic ones. Each is the difference between the identity for
/// ζ·G and the same identity for ζ, so only the line data of G enters and the
/// checks are exact up to quadrature. G = Q/c with log c = log Πa − log Πb;
/// constants of the form log c·∫k come from ∫₀^∞ k in closed form.
pub fn relocation_checks(
    line: &RelocationLine<'_>,
    spec: &QuadratureSpec,
    group: &str,
    xs: &[f64],
    ts: &[f64],
) -> Vec<VerificationRecord> {
    let reloc = line.relocation();
    let zs = reloc.synthetic();
    let log_c = reloc.log_c();
    let mut out = Vec::new();
    let one = c(1.0, 0.0);
    let wrap = |id: String, r: Result<VerificationRecord>| r.unwrap_or_else(|e| VerificationRecord::failed(id, e));

    match group {
        "thm22" => {
            for s in [c(2.0, 0.0), c(1.5, 3.0)] {
                let t0 = Instant::now();
                let id = format!("thm22.synthetic.B.s{}", crate::report::format_short(s));
                out.push(wrap(id.clone(), (|| {
                    let est = log_zeta_b(line, s, spec)?;
                    let rhs = est.value.exp() * blaschke_b(s, zs)?;
                    let lhs = (reloc.log_g(s) + log_c).exp();
                    Ok(VerificationRecord::new(id.clone(), lhs, rhs, 1e-8, rhs.norm() * est.uncertainty().exp_m1()))
                })()).timed(t0));
                let t0 = Instant::now();
                let id = format!("thm22.synthetic.C.s{}", crate::report::format_short(s));
                out.push(wrap(id.clone(), (|| {
                    let est = log_zeta_c(line, s, spec)?;
                    let rhs = est.value.exp() * c_product(s, zs)?;
                    let lhs = reloc.log_g(s).exp();
                    Ok(VerificationRecord::new(id.clone(), lhs, rhs, 1e-8, rhs.norm() * est.uncertainty().exp_m1()))
                })()).timed(t0));
            }
        }
        "thm24" => {
            let t0 = Instant::now();
            let id = "thm24.synthetic".to_string();
            let r = (|| -> Result<Vec<VerificationRecord>> {
                let om = omega(line, spec)?;
                let d_omega = om.value - log_c;
                let j1v = j1(line, spec)?;
                let d_j1 = j1v.value + 2.0 * log_c;
                let j2v = j2(line, spec)?;
                let bb = blaschke_log_derivative(one, zs).re;
                let cc = c_log_derivative(one, zs).re;
                let chain1 = d_j1 + 2.0 * d_omega + bb;
                let chain2 = j2v.value + cc;
                let anchor = reloc.log_derivative(one).re;
                let u = j1v.uncertainty() + 2.0 * om.uncertainty() + j2v.uncertainty();
                let b1 = blaschke_b(one, zs)?.re;
                let pairs: f64 = zs.zeros().iter().map(|&z| f_rho_pair(z)).sum::<Result<f64>>()?;
                Ok(vec![
                    VerificationRecord::real("thm24.synthetic.chains", chain1, chain2, 1e-6, u),
                    VerificationRecord::real("thm24.synthetic.anchor", chain1, anchor, 1e-6, u),
                    VerificationRecord::real("thm24.synthetic.omega", d_omega, -b1.ln(), 1e-8, om.uncertainty()),
                    VerificationRecord::real("thm24.synthetic.frho_sum", bb + 2.0 * d_omega, pairs, 1e-8, 2.0 * om.uncertainty()),
                ])
            })();
            match r {
                Ok(rs) => out.extend(rs.into_iter().map(|r| r.timed(t0))),
                Err(e) => out.push(VerificationRecord::failed(id, e)),
            }
        }
        "thm25" => {
            for &t in ts {
                let t0 = Instant::now();
                let id = format!("thm25.synthetic.t{t}");
                out.push(wrap(id.clone(), (|| {
                    let d_n2 = n2(line, t, 1e-3, spec)?;
                    let (n3, nb) = n3_and_nb(t, zs, spec)?;
                    let lhs = reloc.count_change(t) - nb as f64;
                    Ok(VerificationRecord::real(id.clone(), lhs, d_n2.value + n3, 1e-6, d_n2.uncertainty()))
                })()).timed(t0));
            }
        }
        "thm33a" | "thm33b" => {
            for &x in xs {
                let t0 = Instant::now();
                let id = format!("{group}.synthetic.x{x:.4}");
                out.push(wrap(id.clone(), (|| {
                    let lhs = reloc.f_g(x)?;
                    let (rhs, u) = if group == "thm33a" {
                        let v = f11(line, x, spec)?;
                        (v.value + f12_sum(x, zs)?, v.uncertainty())
                    } else {
                        let v = f21(line, x, spec)?;
                        (v.value + 2.0 * log_c + f22_sum(x, zs)?, v.uncertainty())
                    };
                    Ok(VerificationRecord::real(id.clone(), lhs, rhs, 1e-7, u))
                })()).timed(t0));
            }
            let near_one = 1.0 + 1e-8;
            let t0 = Instant::now();
            if group == "thm33a" {
                let id = "thm33a.synthetic.f12_limit_1".to_string();
                out.push(wrap(id.clone(), f12_sum(near_one, zs).map(|v| VerificationRecord::real(id.clone(), v, 0.0, 1e-6, 0.0))).timed(t0));
            } else {
                let id = "thm33b.synthetic.f22_limit_1".to_string();
                out.push(wrap(id.clone(), (|| {
                    let b1 = blaschke_b(one, zs)?.re;
                    Ok(VerificationRecord::real(id.clone(), f22_sum(near_one, zs)?, -2.0 * b1.ln(), 1e-6, 0.0))
                })()).timed(t0));
            }
            let t0 = Instant::now();
            let id = format!("{group}.synthetic.growth");
            let big = 1e6;
            let f = if group == "thm33a" { f12_sum(big, zs) } else { f22_sum(big, zs) };
            out.push(wrap(id.clone(), f.map(|v| VerificationRecord::at_most(id.clone(), (v / big).abs(), 1e-3, 0.0))).timed(t0));
        }
        "thm34" => {
            for (x, r) in [(10.0, c(2.0, 0.0)), (10.0, c(0.0, 0.0))] {
                let t0 = Instant::now();
                let id = format!("thm34.synthetic.x{x}.r{}", crate::report::format_short(r));
                out.push(wrap(id.clone(), (|| {
                    let integral = theorem34_integral(line, x, r, spec)?;
                    let rhs = integral.value - theorem34_zero_sum(x, r, zs)?;
                    let lhs = reloc.theta_side(x, r)?;
                    Ok(VerificationRecord::new(id.clone(), lhs, rhs, 1e-8, integral.uncertainty()))
                })()).timed(t0));
            }
        }
        _ => {}
    }
    out
}

/// The static identities of the synthetic set: B(1), |B| on the line, f_ρ
/// positivity, the C'/C(1) closed form and sign, and the Φ̃ remainder bound.
pub fn blaschke_static_checks(zs: &SyntheticZeroSet) -> Vec<VerificationRecord> {
    use crate::blaschke::c_pair_log_derivative_at_one;
    use crate::special_fn::phi_tilde;
    let mut out = Vec::new();
    let one = c(1.0, 0.0);
    let t0 = Instant::now();
    match blaschke_b(one, zs) {
        Ok(b1) => {
            let closed: f64 = zs.with_conjugates().map(|z| (1.0 - z).norm() / z.norm()).product();
            out.push(VerificationRecord::new("blaschke.B1", b1, c(closed, 0.0), 1e-12, 0.0).timed(t0));
        }
        Err(e) => out.push(VerificationRecord::failed("blaschke.B1", e)),
    }
    for u in [0.0, 3.0, 14.0, 100.0] {
        let id = format!("blaschke.modulus.u{u}");
        out.push(match blaschke_b(c(0.5, u), zs) {
            Ok(b) => VerificationRecord::real(id, b.norm(), 1.0, 1e-10, 0.0),
            Err(e) => VerificationRecord::failed(id, e),
        });
    }
    for (k, &z) in zs.zeros().iter().enumerate() {
        let id = format!("blaschke.frho_positive.{k}");
        out.push(match f_rho_pair(z) {
            Ok(v) => VerificationRecord::at_most(id, -v, 0.0, 0.0).with_note(format!("f_rho+f_rhobar={v:.6e}")),
            Err(e) => VerificationRecord::failed(id, e),
        });
        let pair = SyntheticZeroSet::new(vec![z]).expect("validated member");
        let closed = c_pair_log_derivative_at_one(z);
        out.push(VerificationRecord::new(format!("blaschke.logcrho.{k}"), c_log_derivative(one, &pair), c(closed, 0.0), 1e-10, 0.0));
        if z.im.abs() > 1.0 / 12f64.sqrt() {
            out.push(VerificationRecord::at_most(format!("blaschke.logcrho_negative.{k}"), closed, 0.0, 0.0));
        }
        for x in [10.0, 100.0, 1e4] {
            let id = format!("blaschke.phitilde_bound.{k}.x{x}");
            let l = f64::ln(x);
            let r = (|| -> Result<VerificationRecord> {
                let mut worst = f64::NEG_INFINITY;
                let mut bound_at = 0.0;
                for a in [z, 1.0 - z.conj(), c(0.5, z.im)] {
                    let main = (a * l).exp() / (a * (a - 1.0) * l);
                    let rem = (phi_tilde(a, x)? - main).norm();
                    let bound = 2.0 * x.powf(a.re) / (a.im * a.im * l * l);
                    if rem - bound > worst {
                        worst = rem - bound;
                        bound_at = bound;
                    }
                }
                Ok(VerificationRecord::at_most(id.clone(), worst + bound_at, bound_at, 0.0))
            })();
            out.push(r.unwrap_or_else(|e| VerificationRecord::failed(id, e)));
        }
    }
    out
}

/// x values used by the f11/f21 checks.
pub fn default_f_points() -> [f64; 3] {
    [E, 10.0, 50.0]
}

/// γ − 1.
pub fn gamma_minus_one() -> f64 {
    EULER_GAMMA - 1.0
}
