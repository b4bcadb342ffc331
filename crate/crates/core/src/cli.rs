//! Batch orchestration behind the `critline` binary: building and reusing
//! caches, running check groups, and writing reports and data series.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_complex::Complex64;

use crate::blaschke::SyntheticZeroSet;
use crate::error::{Error, Result};
use crate::line_integrals::{f11, f21, n1, n2, QuadratureSpec, ZetaLine};
use crate::persist::{config_hash, read_header, CacheHeader};
use crate::prime_side::{build_mangoldt, f_star, MangoldtTable, MAX_SIEVE_LIMIT};
use crate::report::VerificationReport;
use crate::special_fn::theta_exact;
use crate::suite::{run_group, SuiteData, SuiteOptions, CHECK_NAMES, N2_STEP};
use crate::zeros::{scan_zeros, ZeroTable, DEFAULT_REFINE_TOL, DEFAULT_STEP, MIN_SCAN_HEIGHT};
use crate::zeta_engine::{CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};

pub const ZEROS_FILE: &str = "zeros.csv";
pub const SAMPLES_FILE: &str = "line_samples.csv";
pub const EXCLUSIONS_FILE: &str = "line_exclusions.csv";
pub const SIEVE_FILE: &str = "sieve.bin";
pub const REPORT_FILE: &str = "report.csv";
pub const CHECKS_DIR: &str = "checks";

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub max_height: f64,
    pub truncation_t: f64,
    pub sieve_limit: u64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub synthetic_zeros: Option<PathBuf>,
    pub output_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_height: 2000.0,
            truncation_t: 1000.0,
            sieve_limit: 1_000_000,
            abs_tol: 1e-10,
            rel_tol: 1e-12,
            synthetic_zeros: None,
            output_dir: PathBuf::from("critline-out"),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.max_height >= MIN_SCAN_HEIGHT) || !self.max_height.is_finite() {
            return Err(Error::Domain(format!(
                "max height must be at least {MIN_SCAN_HEIGHT}, got {}",
                self.max_height
            )));
        }
        if !(self.truncation_t > 0.0 && self.truncation_t <= self.max_height) {
            return Err(Error::Domain(format!(
                "truncation T must lie in (0, max height = {}], got {}",
                self.max_height, self.truncation_t
            )));
        }
        if !(2..=MAX_SIEVE_LIMIT).contains(&self.sieve_limit) {
            return Err(Error::Domain(format!("sieve limit must lie in [2, {MAX_SIEVE_LIMIT}]")));
        }
        self.spec().validate()
    }

    pub fn spec(&self) -> QuadratureSpec {
        QuadratureSpec::default().with_truncation(self.truncation_t).with_tolerances(self.abs_tol, self.rel_tol)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.output_dir.join(name)
    }

    fn zeros_hash(&self) -> String {
        config_hash(&format!("zeros height={} step={DEFAULT_STEP} refine={DEFAULT_REFINE_TOL}", self.max_height))
    }

    fn line_hash(&self) -> String {
        config_hash(&format!(
            "line {} spacing={DEFAULT_SPACING} exclusion={DEFAULT_EXCLUSION}",
            self.zeros_hash()
        ))
    }
}

/// What a command needs loaded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Needs {
    pub zeros: bool,
    pub line: bool,
    pub primes: bool,
}

impl Needs {
    pub const ALL: Needs = Needs { zeros: true, line: true, primes: true };

    pub fn for_check(name: &str) -> Needs {
        match name {
            "kernels" => Needs::default(),
            "spur1" => Needs { zeros: true, ..Needs::default() },
            "thm31" | "thm32" => Needs { primes: true, ..Needs::default() },
            "thm33a" | "thm33b" | "thm34" => Needs::ALL,
            _ => Needs { zeros: true, line: true, primes: false },
        }
    }

    fn union(self, o: Needs) -> Needs {
        Needs { zeros: self.zeros || o.zeros, line: self.line || o.line, primes: self.primes || o.primes }
    }
}

/// Caches held in memory for one run.
#[derive(Default)]
pub struct Artifacts {
    pub zeros: Option<ZeroTable>,
    pub cache: Option<CriticalLineCache>,
    pub primes: Option<MangoldtTable>,
}

impl Artifacts {
    pub fn data<'a>(&'a self, synthetic: Option<&'a SyntheticZeroSet>) -> SuiteData<'a> {
        SuiteData { zeros: self.zeros.as_ref(), cache: self.cache.as_ref(), primes: self.primes.as_ref(), synthetic }
    }
}

fn header_matches(path: &Path, hash: &str) -> bool {
    read_header(path).map(|h| h.config_hash == hash).unwrap_or(false)
}

/// Loads each needed cache from the output directory when its header hash
/// matches the configuration, and rebuilds (and rewrites) it otherwise.
pub fn load_or_build(cfg: &RunConfig, needs: Needs, log: &mut dyn Write) -> Result<Artifacts> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.output_dir)?;
    let mut art = Artifacts::default();
    if needs.zeros || needs.line {
        let path = cfg.path(ZEROS_FILE);
        let hash = cfg.zeros_hash();
        let loaded = if header_matches(&path, &hash) { ZeroTable::read_csv(&path).ok().map(|(_, t)| t) } else { None };
        let table = match loaded {
            Some(t) => t,
            None => {
                let start = Instant::now();
                let t = scan_zeros(cfg.max_height, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
                t.write_csv(&path, CacheHeader::new("zeros", &hash))?;
                writeln!(log, "built {} ({} zeros, {:.1}s)", path.display(), t.len(), start.elapsed().as_secs_f64())?;
                t
            }
        };
        if !table.count_consistent() {
            writeln!(log, "warning: zero count below {} disagrees with the smooth count", table.height())?;
        }
        art.zeros = Some(table);
    }
    if needs.line {
        let (samples, exclusions) = (cfg.path(SAMPLES_FILE), cfg.path(EXCLUSIONS_FILE));
        let hash = cfg.line_hash();
        let loaded = if header_matches(&samples, &hash) && header_matches(&exclusions, &hash) {
            CriticalLineCache::read_csv(&samples, &exclusions).ok().map(|(_, c)| c)
        } else {
            None
        };
        let cache = match loaded {
            Some(c) => c,
            None => {
                let start = Instant::now();
                let table = art.zeros.as_ref().expect("zero table loaded above");
                let c = CriticalLineCache::build(table, cfg.max_height, DEFAULT_SPACING, DEFAULT_EXCLUSION)?;
                c.write_csv(&samples, &exclusions, CacheHeader::new("line", &hash))?;
                writeln!(log, "built {} ({:.1}s)", samples.display(), start.elapsed().as_secs_f64())?;
                c
            }
        };
        art.cache = Some(cache);
    }
    if needs.primes {
        let path = cfg.path(SIEVE_FILE);
        let primes = match MangoldtTable::read_cache(&path, cfg.sieve_limit) {
            Ok(t) => t,
            Err(_) => {
                let start = Instant::now();
                let t = build_mangoldt(cfg.sieve_limit)?;
                t.write_cache(&path)?;
                writeln!(log, "built {} ({:.1}s)", path.display(), start.elapsed().as_secs_f64())?;
                t
            }
        };
        art.primes = Some(primes);
    }
    Ok(art)
}

/// Writes every cache for `cfg` and prints a summary.
pub fn cmd_build(cfg: &RunConfig, log: &mut dyn Write) -> Result<()> {
    let art = load_or_build(cfg, Needs::ALL, log)?;
    let zeros = art.zeros.as_ref().expect("built");
    writeln!(
        log,
        "{} zeros below {} (count consistent: {}), line samples every {} up to {}, sieve to {}",
        zeros.len(),
        zeros.height(),
        zeros.count_consistent(),
        DEFAULT_SPACING,
        cfg.max_height,
        cfg.sieve_limit
    )?;
    Ok(())
}

/// Point overrides for verify and series.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Overrides {
    pub x: Option<f64>,
    pub s: Option<Complex64>,
    pub r: Option<Complex64>,
    pub t: Option<f64>,
}

/// Validates check names; an empty list selects all of them.
pub fn resolve_checks(names: &[String]) -> Result<Vec<&'static str>> {
    if names.is_empty() {
        return Ok(CHECK_NAMES.to_vec());
    }
    names
        .iter()
        .map(|n| {
            CHECK_NAMES.iter().copied().find(|c| c == n).ok_or_else(|| {
                Error::Domain(format!("unknown check {n}; expected one of {}", CHECK_NAMES.join(", ")))
            })
        })
        .collect()
}

/// Runs the selected groups, writes `report.csv` and one JSON file per
/// record under `checks/`, and returns the report.
pub fn cmd_verify(cfg: &RunConfig, checks: &[String], ov: Overrides, log: &mut dyn Write) -> Result<VerificationReport> {
    let names = resolve_checks(checks)?;
    if let Some(x) = ov.x {
        if x > cfg.sieve_limit as f64 {
            return Err(Error::OutOfRange { requested: x, available: cfg.sieve_limit as f64 });
        }
    }
    let synthetic = cfg.synthetic_zeros.as_deref().map(SyntheticZeroSet::read_csv).transpose()?;
    let mut needs = names.iter().fold(Needs::default(), |n, c| n.union(Needs::for_check(c)));
    if synthetic.as_ref().is_some_and(|s| !s.is_empty()) {
        needs.zeros = true;
    }
    let art = load_or_build(cfg, needs, log)?;
    let data = art.data(synthetic.as_ref());
    let opts = SuiteOptions { spec: cfg.spec(), x: ov.x, s: ov.s, r: ov.r, t: ov.t, ..SuiteOptions::new(cfg.truncation_t) };
    let mut report = VerificationReport::default();
    for name in names {
        let records = run_group(name, &opts, &data)?;
        for r in &records {
            writeln!(log, "{r}")?;
        }
        report.extend(records);
    }
    report.write_csv(&cfg.path(REPORT_FILE))?;
    let checks_dir = cfg.path(CHECKS_DIR);
    if checks_dir.is_dir() {
        fs::remove_dir_all(&checks_dir)?;
    }
    report.write_json(&checks_dir)?;
    let failed = report.entries.iter().filter(|r| !r.pass).count();
    writeln!(log, "{} records, {failed} failed; report in {}", report.entries.len(), cfg.path(REPORT_FILE).display())?;
    Ok(report)
}

pub const SERIES_NAMES: [&str; 5] = ["fstar", "f11", "f21", "n_decomp", "theta"];

/// One row of a data series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesRow {
    pub arg: f64,
    pub value: f64,
    pub err_est: f64,
}

/// Inclusive grid from..=to with the given step.
pub fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && from.is_finite() && to >= from) {
        return Err(Error::Domain(format!("invalid range [{from}, {to}] with step {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| from + k as f64 * step).collect())
}

/// Default range of each series.
pub fn default_range(what: &str) -> (f64, f64, f64) {
    match what {
        "theta" => (0.0, 100.0, 1.0),
        "n_decomp" => (10.5, 100.5, 1.0),
        _ => (2.0, 100.0, 1.0),
    }
}

/// Evaluates a series. fstar, f11 and f21 take x in (1, sieve limit]; n_decomp
/// takes t with 0 < t < T and skips points too close to a zero ordinate.
pub fn series(what: &str, args: &[f64], art: &Artifacts, spec: &QuadratureSpec) -> Result<Vec<SeriesRow>> {
    let line = || -> Result<ZetaLine<'_>> {
        let zeros = art.zeros.as_ref().ok_or_else(|| Error::Domain("series needs a zero table".into()))?;
        ZetaLine::new(zeros, art.cache.as_ref(), spec.truncation_t)
    };
    let primes = || art.primes.as_ref().ok_or_else(|| Error::Domain("series needs a prime table".into()));
    let mut rows = Vec::with_capacity(args.len());
    match what {
        "theta" => rows.extend(args.iter().map(|&t| SeriesRow { arg: t, value: theta_exact(t), err_est: 0.0 })),
        "fstar" => {
            let tab = primes()?;
            for &x in args {
                rows.push(SeriesRow { arg: x, value: f_star(x, tab)?, err_est: 0.0 });
            }
        }
        "f11" | "f21" => {
            let l = line()?;
            for &x in args {
                let e = if what == "f11" { f11(&l, x, spec)? } else { f21(&l, x, spec)? };
                rows.push(SeriesRow { arg: x, value: e.value, err_est: e.uncertainty() });
            }
        }
        "n_decomp" => {
            let l = line()?;
            for &t in args {
                match n2(&l, t, N2_STEP, spec) {
                    Ok(e) => rows.push(SeriesRow { arg: t, value: n1(t) + e.value, err_est: e.uncertainty() }),
                    Err(Error::Domain(_)) if t > 0.0 && t < spec.truncation_t => continue,
                    Err(e) => return Err(e),
                }
            }
        }
        _ => return Err(Error::Domain(format!("unknown series {what}; expected one of {}", SERIES_NAMES.join(", ")))),
    }
    Ok(rows)
}

/// Writes `series_<what>.csv` with columns arg,value,err_est and returns its path.
pub fn cmd_series(
    cfg: &RunConfig,
    what: &str,
    range: Option<(f64, f64, f64)>,
    log: &mut dyn Write,
) -> Result<PathBuf> {
    if !SERIES_NAMES.contains(&what) {
        return Err(Error::Domain(format!("unknown series {what}; expected one of {}", SERIES_NAMES.join(", "))));
    }
    let (from, to, step) = range.unwrap_or_else(|| default_range(what));
    let args = grid(from, to, step)?;
    match what {
        "fstar" | "f11" | "f21" => {
            if from <= 1.0 || to > cfg.sieve_limit as f64 {
                return Err(Error::OutOfRange { requested: if from <= 1.0 { from } else { to }, available: cfg.sieve_limit as f64 });
            }
        }
        "n_decomp" if from <= 0.0 || to >= cfg.truncation_t => {
            return Err(Error::OutOfRange { requested: to.max(-from), available: cfg.truncation_t });
        }
        _ => {}
    }
    let needs = match what {
        "fstar" => Needs { primes: true, ..Needs::default() },
        "f11" | "f21" | "n_decomp" => Needs { zeros: true, line: true, primes: false },
        _ => Needs::default(),
    };
    let art = load_or_build(cfg, needs, log)?;
    let rows = series(what, &args, &art, &cfg.spec())?;
    let path = cfg.path(&format!("series_{what}.csv"));
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record(["arg", "value", "err_est"])?;
    for r in &rows {
        w.write_record([format!("{}", r.arg), format!("{:.15e}", r.value), format!("{:.3e}", r.err_est)])?;
    }
    w.flush()?;
    writeln!(log, "{} rows written to {}", rows.len(), path.display())?;
    Ok(path)
}

/// Parses `2`, `-0.5`, `1.5+3i`, `0.6-14i`, `3i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a complex number: {text}"));
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let split = body.char_indices().skip(1).filter(|&(k, ch)| {
        (ch == '+' || ch == '-') && !matches!(body.as_bytes()[k - 1], b'e' | b'E')
    });
    let (re, im) = match split.last() {
        Some((k, _)) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        v => v,
    };
    Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
}
