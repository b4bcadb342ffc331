//! Arithmetic side: a von Mangoldt table from a segmented sieve, the step
//! sums ψ, π*, ψ_r, π_{*,r}, the function f*, and numerical Mellin checks.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::line_integrals::{quadrature::gauss_kronrod, HalfLine, QuadratureSpec};
use crate::persist::{config_hash, CacheHeader};
use crate::report::VerificationRecord;
use crate::special_fn::{ei, ei0, phi_big_log, EULER_GAMMA};
use crate::zeta_engine::zeta_with_derivative;

pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;
const SEGMENT: u64 = 1 << 18;

/// Λ(n) on 2 ≤ n ≤ limit, stored sparsely at the prime powers n = p^m.
#[derive(Clone, Debug)]
pub struct MangoldtTable {
    limit: u64,
    /// (n, p, m) with n = p^m, increasing in n.
    powers: Vec<(u64, u64, u32)>,
    /// Prefix sums over `powers`, each with a leading 0: Σ Λ, Σ Λ/log n, Σ Λ/(n log n).
    psi_cum: Vec<f64>,
    pistar_cum: Vec<f64>,
    recip_cum: Vec<f64>,
}

fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn sieve(limit: u64) -> Vec<u64> {
    let root = (limit as f64).sqrt() as u64 + 1;
    let base = small_primes(root);
    let starts: Vec<u64> = (0..).map(|k| 2 + k * SEGMENT).take_while(|&lo| lo <= limit).collect();
    let chunks: Vec<Vec<u64>> = starts
        .par_iter()
        .map(|&lo| {
            let hi = (lo + SEGMENT - 1).min(limit);
            let mut composite = vec![false; (hi - lo + 1) as usize];
            for &p in &base {
                if p * p > hi {
                    break;
                }
                let first = (p * p).max(lo.div_ceil(p) * p);
                let mut j = first;
                while j <= hi {
                    composite[(j - lo) as usize] = true;
                    j += p;
                }
            }
            composite.iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| lo + i as u64).collect()
        })
        .collect();
    chunks.concat()
}

/// Compensated running sums with a leading zero.
fn prefix(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut out = vec![0.0];
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() { (sum - t) + v } else { (v - t) + sum };
        sum = t;
        out.push(sum + comp);
    }
    out
}

/// Sieves Λ up to X (2 ≤ X ≤ 10⁸).
pub fn build_mangoldt(limit: u64) -> Result<MangoldtTable> {
    if !(2..=MAX_SIEVE_LIMIT).contains(&limit) {
        return domain(format!("sieve limit must lie in [2, {MAX_SIEVE_LIMIT}], got {limit}"));
    }
    Ok(MangoldtTable::from_primes(limit, sieve(limit)))
}

impl MangoldtTable {
    fn from_primes(limit: u64, primes: Vec<u64>) -> Self {
        let mut powers = Vec::with_capacity(primes.len() + primes.len() / 8);
        for &p in &primes {
            let (mut n, mut m) = (p, 1u32);
            loop {
                powers.push((n, p, m));
                match n.checked_mul(p) {
                    Some(next) if next <= limit => {
                        n = next;
                        m += 1;
                    }
                    _ => break,
                }
            }
        }
        powers.sort_unstable_by_key(|t| t.0);
        let psi_cum = prefix(powers.iter().map(|&(_, p, _)| (p as f64).ln()));
        let pistar_cum = prefix(powers.iter().map(|&(_, _, m)| 1.0 / m as f64));
        let recip_cum = prefix(powers.iter().map(|&(n, _, m)| 1.0 / (m as f64 * n as f64)));
        MangoldtTable { limit, powers, psi_cum, pistar_cum, recip_cum }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Prime powers n ≤ limit, increasing.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.powers.iter().map(|t| t.0)
    }

    /// Λ(n).
    pub fn lambda(&self, n: u64) -> f64 {
        match self.powers.binary_search_by_key(&n, |t| t.0) {
            Ok(i) => (self.powers[i].1 as f64).ln(),
            Err(_) => 0.0,
        }
    }

    fn count_upto(&self, x: f64) -> Result<usize> {
        if !(x >= 1.0) || x > self.limit as f64 {
            return Err(Error::OutOfRange { requested: x, available: self.limit as f64 });
        }
        let n = x.floor() as u64;
        Ok(self.powers.partition_point(|t| t.0 <= n))
    }

    /// Σ_{n≤x} Λ(n)·w(n) over the stored powers, as (n, log p, m) triples.
    fn weighted<F: Fn(u64, f64, u32) -> Complex64>(&self, x: f64, w: F) -> Result<Complex64> {
        let k = self.count_upto(x)?;
        Ok(self.powers[..k].iter().map(|&(n, p, m)| w(n, (p as f64).ln(), m)).sum())
    }

    /// Binary cache: a header line, then the primes as little-endian u32.
    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let header = CacheHeader::new("sieve", &sieve_hash(self.limit)).with("limit", self.limit);
        let mut out = BufWriter::new(File::create(path)?);
        writeln!(out, "{}", crate::persist::header_line(&header))?;
        for &(_, p, m) in &self.powers {
            if m == 1 {
                out.write_all(&(p as u32).to_le_bytes())?;
            }
        }
        out.flush()?;
        Ok(())
    }

    /// Loads a cache written for exactly this limit.
    pub fn read_cache(path: &Path, limit: u64) -> Result<Self> {
        let bad = |reason: &str| Error::Cache { path: path.display().to_string(), reason: reason.into() };
        let mut reader = BufReader::new(File::open(path)?);
        let mut first = String::new();
        reader.read_line(&mut first)?;
        let header = crate::persist::parse_header_line(first.trim_end())?;
        if header.kind != "sieve" || header.config_hash != sieve_hash(limit) {
            return Err(bad("generated for a different sieve limit"));
        }
        let mut bytes = Vec::new();
        reader.read_to_end(&mut bytes)?;
        if bytes.len() % 4 != 0 {
            return Err(bad("truncated prime list"));
        }
        let primes: Vec<u64> =
            bytes.chunks_exact(4).map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]) as u64).collect();
        if primes.windows(2).any(|w| w[0] >= w[1]) || primes.last().is_some_and(|&p| p > limit) {
            return Err(bad("prime list is not increasing within the limit"));
        }
        Ok(MangoldtTable::from_primes(limit, primes))
    }
}

fn sieve_hash(limit: u64) -> String {
    config_hash(&format!("sieve limit={limit}"))
}

/// ψ(x) = Σ_{n≤x} Λ(n).
pub fn psi(x: f64, tab: &MangoldtTable) -> Result<f64> {
    Ok(tab.psi_cum[tab.count_upto(x)?])
}

/// π*(x) = Σ_{n≤x} Λ(n)/log n.
pub fn pi_star(x: f64, tab: &MangoldtTable) -> Result<f64> {
    Ok(tab.pistar_cum[tab.count_upto(x)?])
}

/// ψ_r(x) = Σ_{n≤x} Λ(n) n^{−r}.
pub fn psi_r(x: f64, r: Complex64, tab: &MangoldtTable) -> Result<Complex64> {
    tab.weighted(x, |n, lp, _| lp * (-r * (n as f64).ln()).exp())
}

/// π_{*,r}(x) = Σ_{n≤x} Λ(n)/(n^r log n).
pub fn pi_star_r(x: f64, r: Complex64, tab: &MangoldtTable) -> Result<Complex64> {
    tab.weighted(x, |n, _, m| (-r * (n as f64).ln()).exp() / m as f64)
}

/// ∫₁ˣ π_{*,r}(y)/y dy by Gauss–Kronrod on each interval where the step
/// function is constant.
pub fn pi_star_r_log_integral(x: f64, r: Complex64, tab: &MangoldtTable) -> Result<Complex64> {
    let k = tab.count_upto(x)?;
    let mut level = Complex64::new(0.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..k {
        let (n, _, m) = tab.powers[i];
        level += (-r * (n as f64).ln()).exp() / m as f64;
        let hi = if i + 1 < k { tab.powers[i + 1].0 as f64 } else { x };
        let (v, _) = gauss_kronrod(&|y: f64| 1.0 / y, n as f64, hi);
        acc += level * v;
    }
    Ok(acc)
}

/// f*(x) = x(Σ_{n≤x} Λ(n)/(n log n) + Ei₀(−log x)) − (π*(x) − Ei₀(log x)).
pub fn f_star(x: f64, tab: &MangoldtTable) -> Result<f64> {
    if !(x > 1.0) {
        return domain(format!("f* needs x > 1, got {x}"));
    }
    let k = tab.count_upto(x)?;
    let l = x.ln();
    let e_neg = ei0(Complex64::new(-l, 0.0)).re;
    let e_pos = ei0(Complex64::new(l, 0.0)).re;
    Ok(x * (tab.recip_cum[k] + e_neg) - (tab.pistar_cum[k] - e_pos))
}

/// x ∫₁ˣ (π*(y) − Ei₀(log y))/y² dy by piecewise quadrature in v = log y.
pub fn f_star_by_quadrature(x: f64, tab: &MangoldtTable) -> Result<f64> {
    let k = tab.count_upto(x)?;
    let mut cuts = vec![0.0];
    cuts.extend(tab.powers[..k].iter().map(|t| (t.0 as f64).ln()));
    cuts.push(x.ln());
    let mut acc = 0.0;
    for (i, w) in cuts.windows(2).enumerate() {
        let level = tab.pistar_cum[i];
        let g = |v: f64| (level - ei0(Complex64::new(v, 0.0)).re) * (-v).exp();
        acc += HalfLine::new(w[0], w[1]).integrate(&fine_spec(), g)?.value;
    }
    Ok(x * acc)
}

fn fine_spec() -> QuadratureSpec {
    QuadratureSpec { abs_tol: 1e-13, rel_tol: 1e-13, ..QuadratureSpec::default() }
}

/// ∫₀^V g(v)e^{−sv} dv with a logarithmic point at v = 0.
fn v_integral<F: Fn(f64) -> Complex64 + Sync>(
    spec: &QuadratureSpec,
    big_v: f64,
    omega: f64,
    g: F,
) -> Result<(Complex64, f64)> {
    let est = HalfLine::new(0.0, big_v)
        .log_points(&[0.0])
        .oscillation(omega)
        .max_panel(1.0)
        .integrate(spec, g)?;
    Ok((est.value, est.err))
}

/// ∫_V^∞ A·v^k e^{−d v} dv for slowly varying amplitudes, bounded generously.
fn exp_tail(amplitude: f64, decay: f64, big_v: f64) -> f64 {
    if decay <= 0.0 {
        return f64::INFINITY;
    }
    amplitude * (-decay * big_v).exp() / decay * (1.0 + 2.0 / (decay * big_v))
}

/// Error in exp(I) induced by an error δ in I.
fn exp_spread(value: Complex64, delta: f64) -> f64 {
    value.norm() * delta.exp_m1()
}

/// Sums Λ(n)w(n)(n^{−a} − X^{−a}) exactly over n ≤ X.
fn step_mellin(tab: &MangoldtTable, x_max: f64, a: Complex64, weight: impl Fn(u64, f64, u32) -> f64) -> Result<Complex64> {
    let cap = (-a * x_max.ln()).exp();
    tab.weighted(x_max, |n, lp, m| weight(n, lp, m) * ((-a * (n as f64).ln()).exp() - cap))
}

/// Theorems 3.1(a,b,c), the Φ_α Mellin identity, and the prime-side Mellin
/// identities of ζ, each as LHS vs exponentiated integral over (1, X].
pub fn mellin_checks(
    s: Complex64,
    alpha: Complex64,
    x_max: f64,
    tab: &MangoldtTable,
    spec: &QuadratureSpec,
) -> Result<Vec<VerificationRecord>> {
    let sigma = s.re;
    if !(sigma > 1.0) {
        return domain(format!("Mellin checks need Re(s) > 1, got {s}"));
    }
    if !(x_max > 1.0) {
        return domain("X must exceed 1");
    }
    let big_v = x_max.ln();
    let omega = s.im.abs();
    let sp = s.norm();
    let mut out = Vec::new();
    let decay = |v: f64| (-s * v).exp();

    // (a) 1/s = exp(s∫(γ + log log x)x^{−s−1})
    let t0 = Instant::now();
    let (i, err) = v_integral(spec, big_v, omega, |v| (EULER_GAMMA + v.ln()) * decay(v))?;
    let rhs = (s * i).exp();
    let tail = exp_spread(rhs, sp * (err + exp_tail(EULER_GAMMA + big_v.ln(), sigma, big_v)));
    out.push(VerificationRecord::new("thm31.a", 1.0 / s, rhs, 1e-6, tail).timed(t0));

    // (b) 1/(s−1) = exp(s∫Li(x)x^{−s−1})
    let t0 = Instant::now();
    let (i, err) = v_integral(spec, big_v, omega, |v| ei(v).unwrap_or(f64::NAN) * decay(v))?;
    let rhs = (s * i).exp();
    let tail = exp_spread(rhs, sp * (err + exp_tail(1.0 / big_v, sigma - 1.0, big_v)));
    out.push(VerificationRecord::new("thm31.b", 1.0 / (s - 1.0), rhs, 1e-6, tail).timed(t0));

    // (c) 1 − s/α = exp(−s∫φ_α x^{−s−1}), Re α < Re s
    if alpha.re < sigma && !(alpha.im == 0.0 && alpha.re >= 0.0) {
        let t0 = Instant::now();
        let w = omega.max(alpha.im.abs());
        let la = (-alpha).ln();
        let (i, err) = v_integral(spec, big_v, w, |v| (EULER_GAMMA + v.ln() + la + ei0(alpha * v)) * decay(v))?;
        let rhs = (-s * i).exp();
        let amp = (EULER_GAMMA + big_v.ln() + la.norm()) + 1.0 / (alpha.norm() * big_v);
        let tail = exp_spread(rhs, sp * (err + exp_tail(amp, sigma - alpha.re.max(0.0), big_v)));
        out.push(VerificationRecord::new("thm31.c", 1.0 - s / alpha, rhs, 1e-6, tail).timed(t0));
    }

    // 1 − s/α = exp(−s(s−1)∫Φ_α x^{−s−1}), Re s > Re α > 0
    if alpha.re > 0.0 && alpha.re < sigma && alpha.im != 0.0 {
        let t0 = Instant::now();
        let w = omega.max(alpha.im.abs());
        let (i, err) = v_integral(spec, big_v, w, |v| {
            if v == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            phi_big_log(alpha, v).unwrap_or(Complex64::new(f64::NAN, 0.0)) * decay(v)
        })?;
        let rhs = (-s * (s - 1.0) * i).exp();
        let amp = EULER_GAMMA + big_v.ln() + (-alpha).ln().norm() + 1.0 / ((alpha - 1.0).norm() * big_v);
        let tail_i = exp_tail(amp, sigma - 1.0, big_v) + exp_tail(1.0 / (alpha.norm() * big_v), sigma - alpha.re, big_v);
        let tail = exp_spread(rhs, (s * (s - 1.0)).norm() * (err + tail_i));
        out.push(VerificationRecord::new("thm31.phimellin", 1.0 - s / alpha, rhs, 1e-6, tail).timed(t0));
    }

    if x_max > tab.limit() as f64 {
        return Err(Error::OutOfRange { requested: x_max, available: tab.limit() as f64 });
    }
    let (zeta_s, dzeta_s) = zeta_with_derivative(s)?;
    let ln_x = big_v;
    // crude but safe envelopes: π*(x) ≤ 1.3x/log x + √x, ψ(x) ≤ 1.04x
    let pistar_tail = sp * (1.3 * x_max.powf(1.0 - sigma) / ((sigma - 1.0) * ln_x)
        + x_max.powf(0.5 - sigma) / (sigma - 0.5));
    let psi_tail = sp * 1.04 * x_max.powf(1.0 - sigma) / (sigma - 1.0);

    // log ζ(s) = s∫π* x^{−s−1}, evaluated exactly as Σ (1/m)(n^{−s} − X^{−s})
    let t0 = Instant::now();
    let i_pi = step_mellin(tab, x_max, s, |_, _, m| 1.0 / m as f64)?;
    let rhs = i_pi.exp();
    out.push(VerificationRecord::new("thm32.zetapi", zeta_s, rhs, 1e-5, exp_spread(rhs, pistar_tail)).timed(t0));

    // −ζ'/ζ(s) = s∫ψ x^{−s−1} = Σ Λ(n)(n^{−s} − X^{−s})
    let t0 = Instant::now();
    let rhs = step_mellin(tab, x_max, s, |_, lp, _| lp)?;
    out.push(VerificationRecord::new("thm32.zetapsi", -dzeta_s / zeta_s, rhs, 1e-5, psi_tail).timed(t0));

    // (s−1)/s ζ(s) = exp(s∫(π* − Ei₀(log x))x^{−s−1}), with the trivial bound |π* − Li| ≤ x
    let t0 = Instant::now();
    let (i_ei, err) = v_integral(spec, big_v, omega, |v| ei0(Complex64::new(v, 0.0)) * decay(v))?;
    let rhs = (i_pi - s * i_ei).exp();
    let diff_tail = sp * (err + x_max.powf(1.0 - sigma) / (sigma - 1.0)
        + (EULER_GAMMA + ln_x.ln() + 1.0) * x_max.powf(-sigma) / sigma);
    let lhs = (s - 1.0) / s * zeta_s;
    out.push(VerificationRecord::new("thm32.zetap1", lhs, rhs, 1e-4, exp_spread(rhs, diff_tail)).timed(t0));

    // (s−1)/s ζ(s) = exp(s(s−1)∫f* x^{−s−1}), |f*(x)| ≤ x
    let t0 = Instant::now();
    let i_recip = step_mellin(tab, x_max, s - 1.0, |n, _, m| 1.0 / (m as f64 * n as f64))? / (s - 1.0);
    let i_pistar = i_pi / s;
    let (i_smooth, err) = v_integral(spec, big_v, omega, |v| {
        let vc = Complex64::new(v, 0.0);
        (v.exp() * ei0(-vc) + ei0(vc)) * decay(v)
    })?;
    let i_f = i_recip - i_pistar + i_smooth;
    let rhs = (s * (s - 1.0) * i_f).exp();
    let ss1 = (s * (s - 1.0)).norm();
    let tail = exp_spread(rhs, ss1 * (err + x_max.powf(1.0 - sigma) / (sigma - 1.0)));
    out.push(VerificationRecord::new("thm32.zetap2", lhs, rhs, 1e-4, tail).timed(t0));
    Ok(out)
}
