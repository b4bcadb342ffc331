//! Named check groups over the zeta line, the prime tables and a synthetic
//! zero set. Each group returns verification records; nothing here touches
//! the filesystem.

use std::f64::consts::E;
use std::time::Instant;

use num_complex::Complex64;

use crate::blaschke::{SyntheticZeroSet, ZeroRelocation};
use crate::error::{Error, Result};
use crate::line_integrals::{
    atan_kernel_identity, blaschke_static_checks, calibration_battery, decomposition_check, f11, f21,
    gamma_kernel_identity, gamma_minus_one, j1_j2, omega_zeta, relocation_checks, theorem34_check, xi_poisson,
    zeta_b_eval, zeta_c_eval, QuadratureSpec, RelocationLine, ZetaLine, RELOCATION_HEIGHT,
};
use crate::prime_side::{f_star, mellin_checks, MangoldtTable};
use crate::report::{format_short, VerificationRecord};
use crate::zeros::ZeroTable;
use crate::zeta_engine::{reconstruct_zeta_on_line, zeta, CriticalLineCache};

pub const CHECK_NAMES: [&str; 11] =
    ["thm22", "cor23", "thm24", "thm25", "thm31", "thm32", "thm33a", "thm33b", "thm34", "kernels", "spur1"];

/// Lowest truncation used by the convergence comparison of cor23.
pub const COR23_LOW_T: f64 = 500.0;
pub const N2_STEP: f64 = 1e-3;
/// α of the Φ_α Mellin identity.
pub const PHI_ALPHA: Complex64 = Complex64::new(0.6, 14.0);
/// Cutoff X of the prime-side Mellin integrals.
pub const MELLIN_X: f64 = 1e6;
/// Truncation of the coarse run in the convergence records, as a fraction of
/// T. Errors oscillate in T, so adjacent doublings are not compared.
pub const CONVERGENCE_RATIO: f64 = 0.25;
/// x offset used for the x → 1⁺ limits.
pub const LIMIT_OFFSET: f64 = 1e-6;

/// Per-run options. `None` selects each group's default points.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub truncation_t: f64,
    pub spec: QuadratureSpec,
    pub x: Option<f64>,
    pub s: Option<Complex64>,
    pub r: Option<Complex64>,
    pub t: Option<f64>,
}

impl SuiteOptions {
    pub fn new(truncation_t: f64) -> Self {
        SuiteOptions {
            truncation_t,
            spec: QuadratureSpec::default().with_truncation(truncation_t),
            x: None,
            s: None,
            r: None,
            t: None,
        }
    }

    fn xs(&self) -> Vec<f64> {
        self.x.map_or_else(|| vec![E, 10.0, 50.0], |x| vec![x])
    }

    fn ss(&self, defaults: &[Complex64]) -> Vec<Complex64> {
        self.s.map_or_else(|| defaults.to_vec(), |s| vec![s])
    }

    fn ts(&self) -> Vec<f64> {
        self.t.map_or_else(|| vec![20.0, 30.0, 50.0], |t| vec![t])
    }
}

/// Data a check may need. Groups that need a missing piece fail with a
/// domain error.
pub struct SuiteData<'a> {
    pub zeros: Option<&'a ZeroTable>,
    pub cache: Option<&'a CriticalLineCache>,
    pub primes: Option<&'a MangoldtTable>,
    pub synthetic: Option<&'a SyntheticZeroSet>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn need<'a, T>(v: Option<&'a T>, what: &str) -> Result<&'a T> {
    v.ok_or_else(|| Error::Domain(format!("this check needs {what}")))
}

fn line<'a>(data: &SuiteData<'a>, height: f64) -> Result<ZetaLine<'a>> {
    ZetaLine::new(need(data.zeros, "a zero table")?, data.cache, height)
}

fn guarded(id: &str, start: Instant, f: impl FnOnce() -> Result<Vec<VerificationRecord>>) -> Vec<VerificationRecord> {
    f().unwrap_or_else(|e| vec![VerificationRecord::failed(id, e).timed(start)])
}

/// Runs one named group. Unknown names are a domain error.
pub fn run_group(name: &str, opts: &SuiteOptions, data: &SuiteData<'_>) -> Result<Vec<VerificationRecord>> {
    let t = opts.truncation_t;
    let spec = opts.spec.with_truncation(t);
    let mut out = match name {
        "kernels" => kernels(opts),
        "spur1" => guarded("spur1", Instant::now(), || spur1(need(data.zeros, "a zero table")?)),
        "thm22" => guarded("thm22", Instant::now(), || thm22(opts, data)),
        "cor23" => guarded("cor23", Instant::now(), || cor23(opts, data)),
        "thm24" => guarded("thm24", Instant::now(), || thm24(&line(data, t)?, &spec)),
        "thm25" => guarded("thm25", Instant::now(), || {
            let l = line(data, t)?;
            Ok(opts.ts().into_iter().map(|tt| decomposition_check(&l, tt, N2_STEP, &spec, 0.1)).collect())
        }),
        "thm31" | "thm32" => guarded(name, Instant::now(), || {
            let tab = need(data.primes, "a prime table")?;
            let mut rs = Vec::new();
            for s in opts.ss(&[c(2.0, 0.0)]) {
                let mut group = mellin_checks(s, PHI_ALPHA, MELLIN_X.min(tab.limit() as f64), tab, &spec)?;
                for r in &mut group {
                    r.check_id = format!("{}.s{}", r.check_id, format_short(s));
                }
                rs.extend(group.into_iter().filter(|r| r.check_id.starts_with(name)));
            }
            Ok(rs)
        }),
        "thm33a" | "thm33b" => guarded(name, Instant::now(), || thm33(name, opts, data)),
        "thm34" => guarded("thm34", Instant::now(), || thm34(opts, data)),
        _ => return Err(Error::Domain(format!("unknown check {name}; expected one of {}", CHECK_NAMES.join(", ")))),
    };
    if let Some(zs) = data.synthetic {
        out.extend(synthetic_group(name, opts, data, zs)?);
    }
    Ok(out)
}

/// The relocation counterpart of a group for a synthetic zero set; empty
/// for groups without one.
fn synthetic_group(
    name: &str,
    opts: &SuiteOptions,
    data: &SuiteData<'_>,
    zs: &SyntheticZeroSet,
) -> Result<Vec<VerificationRecord>> {
    if zs.is_empty() {
        return Ok(Vec::new());
    }
    let group = match name {
        "kernels" => return Ok(blaschke_static_checks(zs)),
        "thm22" | "thm24" | "thm25" | "thm33a" | "thm33b" | "thm34" => name,
        _ => return Ok(Vec::new()),
    };
    let table = need(data.zeros, "a zero table")?;
    let reloc = ZeroRelocation::new(zs, table)?;
    let rl = RelocationLine::new(&reloc, RELOCATION_HEIGHT);
    let spec = opts.spec.with_tolerances(1e-12, 1e-12);
    Ok(relocation_checks(&rl, &spec, group, &opts.xs(), &opts.ts()))
}

fn kernels(opts: &SuiteOptions) -> Vec<VerificationRecord> {
    let mut rs = calibration_battery(&QuadratureSpec::default());
    let spec = QuadratureSpec::default().with_tolerances(1e-11, 1e-12);
    for s in opts.ss(&[c(2.0, 0.0), c(3.0, 0.0), c(1.5, 1.0)]) {
        rs.push(gamma_kernel_identity(s, &spec));
        rs.push(atan_kernel_identity(s, &spec));
    }
    rs
}

/// Reconstruction at 20 ordinates of a fixed golden-ratio sequence in
/// (0.5, 40), nudged away from zeros.
pub fn spur1_points(table: &ZeroTable) -> Vec<f64> {
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    (1..=20)
        .map(|k| {
            let mut t = 0.5 + 39.5 * ((k as f64 * golden).fract());
            while table.distance_to_nearest(t) < 0.05 {
                t += 0.1;
            }
            t
        })
        .collect()
}

fn spur1(table: &ZeroTable) -> Result<Vec<VerificationRecord>> {
    spur1_points(table)
        .into_iter()
        .map(|t| {
            let start = Instant::now();
            let lhs = reconstruct_zeta_on_line(t, table)?;
            let rhs = zeta(c(0.5, t))?;
            Ok(VerificationRecord::new(format!("spur1.t{t:.4}"), lhs, rhs, 1e-6, 0.0).timed(start))
        })
        .collect()
}

/// ζ_B and ζ_C against (s−1)/s·ζ(s), relative to |ζ(s)|, plus a convergence
/// record when the table reaches 2T.
fn thm22(opts: &SuiteOptions, data: &SuiteData<'_>) -> Result<Vec<VerificationRecord>> {
    let t = opts.truncation_t;
    let zeros = need(data.zeros, "a zero table")?;
    let mut rs = Vec::new();
    for s in opts.ss(&[c(2.0, 0.0), c(1.5, 3.0)]) {
        let z = zeta(s)?;
        let target = (s - 1.0) / s * z;
        let scale = z.norm();
        for (label, which) in [("B", 0), ("C", 1)] {
            let eval = |h: f64| -> Result<_> {
                let l = line(data, h)?;
                let spec = opts.spec.with_truncation(h);
                if which == 0 { zeta_b_eval(&l, s, &spec) } else { zeta_c_eval(&l, s, &spec) }
            };
            let start = Instant::now();
            let id = format!("thm22.{label}.s{}", format_short(s));
            let est = eval(t)?;
            rs.push(
                VerificationRecord::new(id.clone(), est.value, target, 5e-3 * scale, est.uncertainty())
                    .with_note(format!("relative error {:.3e}, T={t}", (est.value - target).norm() / scale))
                    .timed(start),
            );
            if zeros.height() >= 2.0 * t {
                // ζ_C: plain doubling; ζ_B sits at its accuracy floor by T, so
                // it is compared over the wider bracket T/4 → 2T
                let start = Instant::now();
                let low_t = if which == 1 { t } else { CONVERGENCE_RATIO * t };
                let low = if low_t == t { est } else { eval(low_t)? };
                let est2 = eval(2.0 * t)?;
                let e1 = (low.value - target).norm();
                let e2 = (est2.value - target).norm();
                let suffix = if which == 1 { "doubled" } else { "converges" };
                rs.push(
                    VerificationRecord::at_most(format!("{id}.{suffix}"), e2, e1, 0.0)
                        .with_note(format!("error at T={low_t}: {e1:.3e}, at T={}: {e2:.3e}", 2.0 * t))
                        .timed(start),
                );
            }
        }
    }
    Ok(rs)
}

/// ξ(s) = ½·exp[∫ πN K_C] at s = 2 (and any --s) plus ξ(1) = ½, and the
/// error at min(2T, table height) is no worse than at T = 500.
fn cor23(opts: &SuiteOptions, data: &SuiteData<'_>) -> Result<Vec<VerificationRecord>> {
    let t = opts.truncation_t;
    let l = line(data, t)?;
    let spec = opts.spec.with_truncation(t);
    let mut rs = Vec::new();
    for s in opts.ss(&[c(2.0, 0.0)]) {
        let start = Instant::now();
        let target = crate::zeta_engine::xi(s)?;
        let est = xi_poisson(&l, s, &spec)?;
        rs.push(
            VerificationRecord::new(format!("cor23.xi.s{}", format_short(s)), est.value, target, 2e-3, est.uncertainty())
                .timed(start),
        );
        let top = need(data.zeros, "a zero table")?.height().min(2.0 * t);
        if top > COR23_LOW_T {
            let start = Instant::now();
            let low = xi_poisson(&line(data, COR23_LOW_T)?, s, &spec.with_truncation(COR23_LOW_T))?;
            let high = xi_poisson(&line(data, top)?, s, &spec.with_truncation(top))?;
            let (e_low, e_t) = ((low.value - target).norm(), (high.value - target).norm());
            rs.push(
                VerificationRecord::at_most(format!("cor23.monotone.s{}", format_short(s)), e_t, e_low, 0.0)
                    .with_note(format!("error at T={COR23_LOW_T}: {e_low:.3e}, at T={top}: {e_t:.3e}"))
                    .timed(start),
            );
        }
    }
    let start = Instant::now();
    let est = xi_poisson(&l, c(1.0, 0.0), &spec)?;
    rs.push(VerificationRecord::new("cor23.xi.s1", est.value, c(0.5, 0.0), 2e-3, est.uncertainty()).timed(start));
    Ok(rs)
}

/// J₁ and J₂ against γ − 1 with the inequality directions, and Ω_ζ.
fn thm24(l: &ZetaLine<'_>, spec: &QuadratureSpec) -> Result<Vec<VerificationRecord>> {
    let start = Instant::now();
    let g = gamma_minus_one();
    let (a, b) = j1_j2(l, spec)?;
    let om = omega_zeta(l, spec)?;
    let rs = vec![
        VerificationRecord::real("thm24.J1", a.value, g, 5e-3, a.uncertainty()),
        VerificationRecord::real("thm24.J2", b.value, g, 5e-3, b.uncertainty()),
        VerificationRecord::at_most("thm24.J1_le", a.value, g, a.uncertainty()),
        VerificationRecord::at_most("thm24.J2_ge", -b.value, -g, b.uncertainty()),
        VerificationRecord::real("thm24.J1_J2", a.value, b.value, 1e-2, a.uncertainty() + b.uncertainty()),
        VerificationRecord::real("thm24.omega", om.value, 0.0, 5e-3, om.uncertainty()),
        VerificationRecord::at_most("thm24.omega_nonneg", -om.value, 0.0, om.uncertainty()),
    ];
    Ok(rs.into_iter().map(|r| r.timed(start)).collect())
}

/// f₁₁ (a) or f₂₁ (b) against f* at 2T when the table reaches it (else T),
/// the error there no worse than at T/4, and the x → 1⁺ limits.
fn thm33(name: &str, opts: &SuiteOptions, data: &SuiteData<'_>) -> Result<Vec<VerificationRecord>> {
    let tab = need(data.primes, "a prime table")?;
    let zeros = need(data.zeros, "a zero table")?;
    let t = opts.truncation_t;
    let big = if zeros.height() >= 2.0 * t { 2.0 * t } else { t };
    let f = |x: f64, h: f64| -> Result<_> {
        let l = line(data, h)?;
        let spec = opts.spec.with_truncation(h);
        if name == "thm33a" { f11(&l, x, &spec) } else { f21(&l, x, &spec) }
    };
    let mut rs = Vec::new();
    for x in opts.xs() {
        let start = Instant::now();
        let id = format!("{name}.x{x:.4}");
        let target = f_star(x, tab)?;
        let est = f(x, big)?;
        rs.push(
            VerificationRecord::real(id.clone(), est.value, target, 0.05, est.uncertainty())
                .with_note(format!("T={big}"))
                .timed(start),
        );
        if big > t {
            let start = Instant::now();
            let low_t = CONVERGENCE_RATIO * t;
            let low = f(x, low_t)?;
            let (e_low, e_big) = ((low.value - target).abs(), (est.value - target).abs());
            rs.push(
                VerificationRecord::at_most(format!("{id}.shrinks"), e_big, e_low, 0.0)
                    .with_note(format!("error at T={low_t}: {e_low:.3e}, at T={big}: {e_big:.3e}"))
                    .timed(start),
            );
        }
    }
    let start = Instant::now();
    let near_one = 1.0 + LIMIT_OFFSET;
    let lim = f(near_one, t)?;
    if name == "thm33a" {
        rs.push(VerificationRecord::real("thm33a.limit_1", lim.value, 0.0, 1e-3, lim.uncertainty()).timed(start));
    } else {
        let om = omega_zeta(&line(data, t)?, &opts.spec.with_truncation(t))?;
        rs.push(
            VerificationRecord::real("thm33b.limit_1", lim.value, -2.0 * om.value, 1e-3, lim.uncertainty() + 2.0 * om.uncertainty())
                .timed(start),
        );
    }
    Ok(rs)
}

/// (x, r) = (10, 2) at T within 5e−3 and (10, 0) at 2T within 0.05, or the
/// requested point at T within 0.05.
fn thm34(opts: &SuiteOptions, data: &SuiteData<'_>) -> Result<Vec<VerificationRecord>> {
    let tab = need(data.primes, "a prime table")?;
    let zeros = need(data.zeros, "a zero table")?;
    let t = opts.truncation_t;
    let big = if zeros.height() >= 2.0 * t { 2.0 * t } else { t };
    let points = match (opts.x, opts.r) {
        (None, None) => vec![(10.0, c(2.0, 0.0), t, 5e-3), (10.0, c(0.0, 0.0), big, 0.05)],
        (x, r) => {
            let r = r.unwrap_or(c(0.0, 0.0));
            let tol = if r.re >= 1.0 { 5e-3 } else { 0.05 };
            vec![(x.unwrap_or(10.0), r, if r.re >= 1.0 { t } else { big }, tol)]
        }
    };
    let mut rs = Vec::new();
    for (x, r, h, tol) in points {
        if x > tab.limit() as f64 {
            return Err(Error::OutOfRange { requested: x, available: tab.limit() as f64 });
        }
        let l = line(data, h)?;
        rs.extend(theorem34_check(&l, x, r, tab, &opts.spec.with_truncation(h), tol));
    }
    Ok(rs)
}

/// Default relocation set: one zero at 0.6 + 14i.
pub fn default_synthetic_set() -> SyntheticZeroSet {
    SyntheticZeroSet::new(vec![c(0.6, 14.0)]).expect("valid synthetic zero")
}
