//! The twelve acceptance criteria, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always reach the output.

use std::f64::consts::{E, PI};
use std::process::ExitCode;
use std::time::Instant;

use critline::blaschke::{SyntheticZeroSet, ZeroRelocation};
use critline::line_integrals::{
    atan_kernel_identity, blaschke_static_checks, calibration_battery, default_f_points, gamma_kernel_identity,
    relocation_checks, QuadratureSpec, RelocationLine, RELOCATION_HEIGHT,
};
use critline::prime_side::{build_mangoldt, MangoldtTable};
use critline::report::VerificationRecord;
use critline::suite::{run_group, SuiteData, SuiteOptions};
use critline::zeros::{scan_zeros, ZeroTable, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};
use critline::Complex64;

const T: f64 = 1000.0;
const MAX_HEIGHT: f64 = 2000.0;

struct Data {
    zeros: ZeroTable,
    cache: CriticalLineCache,
    primes: MangoldtTable,
}

impl Data {
    fn suite(&self) -> SuiteData<'_> {
        SuiteData { zeros: Some(&self.zeros), cache: Some(&self.cache), primes: Some(&self.primes), synthetic: None }
    }

    fn group(&self, name: &str) -> Vec<VerificationRecord> {
        run_group(name, &SuiteOptions::new(T), &self.suite()).expect("known group")
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn failing(rs: &[VerificationRecord]) -> Vec<String> {
    rs.iter().filter(|r| !r.pass).map(|r| r.check_id.clone()).collect()
}

fn all_of(rs: &[VerificationRecord], prefixes: &[&str]) -> Outcome {
    let selected: Vec<_> = rs.iter().filter(|r| prefixes.iter().any(|p| r.check_id.starts_with(p))).cloned().collect();
    let bad = failing(&selected);
    let worst = selected.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    Outcome {
        pass: !selected.is_empty() && bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} records, largest |lhs − rhs| {worst:.2e}", selected.len())
        } else {
            format!("failing: {}", bad.join(", "))
        },
    }
}

fn find<'a>(rs: &'a [VerificationRecord], id: &str) -> &'a VerificationRecord {
    rs.iter().find(|r| r.check_id == id).unwrap_or_else(|| panic!("record {id} missing"))
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let rs = calibration_battery(&QuadratureSpec::default());
    let secs = start.elapsed().as_secs_f64();
    let mut o = all_of(&rs, &["kernels."]);
    o.pass &= rs.len() == 100 && secs < 10.0;
    o.detail = format!("{} in {secs:.2}s", o.detail);
    o
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let spec = QuadratureSpec::default().with_tolerances(1e-11, 1e-12);
    let mut rs = Vec::new();
    for s in [c(2.0, 0.0), c(3.0, 0.0), c(1.5, 1.0)] {
        rs.push(gamma_kernel_identity(s, &spec));
        rs.push(atan_kernel_identity(s, &spec));
    }
    let secs = start.elapsed().as_secs_f64();
    let mut o = all_of(&rs, &["kernels."]);
    o.pass &= secs < 60.0;
    o.detail = format!("{} in {secs:.2}s", o.detail);
    o
}

fn criterion3(d: &Data) -> Outcome {
    let rs = d.group("thm22");
    let mut o = all_of(&rs, &["thm22.C.s2", "thm22.C.s1.5+3i", "thm22.B.s2", "thm22.B.s1.5+3i"]);
    for s in ["s2", "s1.5+3i"] {
        let r = find(&rs, &format!("thm22.C.{s}.doubled"));
        o.pass &= r.lhs.re < r.rhs.re;
        o.detail += &format!("; C error at {s}: T={T} {:.2e}, 2T {:.2e}", r.rhs.re, r.lhs.re);
    }
    o
}

fn criterion4(d: &Data) -> Outcome {
    let rs = d.group("cor23");
    let r = find(&rs, "cor23.xi.s2");
    let mut o = all_of(&rs, &["cor23.xi.s2"]);
    o.pass &= (r.rhs.re - PI / 6.0).abs() < 1e-15;
    o.detail = format!("ξ(2) Poisson form {:.6} vs π/6, diff {:.2e}, tail {:.2e}", r.lhs.re, r.abs_diff, r.tail);
    o
}

fn criterion5(d: &Data) -> Outcome {
    let rs = d.group("thm24");
    let mut o = all_of(&rs, &["thm24.J1", "thm24.J2"]);
    o.detail = format!("J1 = {:.10}, J2 = {:.10}; {}", find(&rs, "thm24.J1").lhs.re, find(&rs, "thm24.J2").lhs.re, o.detail);
    o
}

fn criterion6(d: &Data) -> Outcome {
    all_of(&d.group("thm25"), &["thm25.t20", "thm25.t30", "thm25.t50"])
}

fn criterion7(d: &Data) -> Outcome {
    all_of(&d.group("thm31"), &["thm31.a.s2", "thm31.b.s2", "thm31.c.s2", "thm31.phimellin.s2"])
}

fn criterion8(d: &Data) -> Outcome {
    all_of(&d.group("thm32"), &["thm32.zetapsi.s2", "thm32.zetap1.s2"])
}

fn criterion9(d: &Data) -> Outcome {
    let mut rs = d.group("thm33a");
    rs.extend(d.group("thm33b"));
    rs.extend(d.group("thm24"));
    let expected = 2 * (2 * default_f_points().len() + 1);
    let mut o = all_of(&rs, &["thm33a.", "thm33b.", "thm24.omega"]);
    let count = rs.iter().filter(|r| r.check_id.starts_with("thm33")).count();
    o.pass &= count == expected && default_f_points()[0] == E;
    o
}

fn criterion10(d: &Data) -> Outcome {
    let rs = d.group("thm34");
    let mut o = all_of(&rs, &["thm34.x10.r2", "thm34.x10.r0"]);
    o.pass &= rs.iter().filter(|r| r.check_id.ends_with("first_equality")).count() == 2;
    o.pass &= find(&rs, "thm34.x10.r2").tolerance == 5e-3 && find(&rs, "thm34.x10.r0").tolerance == 0.05;
    o
}

fn criterion11(d: &Data) -> Outcome {
    let zs = SyntheticZeroSet::new(vec![c(0.6, 14.0)]).unwrap();
    let mut rs = blaschke_static_checks(&zs);
    let reloc = ZeroRelocation::new(&zs, &d.zeros).unwrap();
    let line = RelocationLine::new(&reloc, RELOCATION_HEIGHT);
    let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-12);
    for g in ["thm22", "thm24", "thm25", "thm33a", "thm33b", "thm34"] {
        rs.extend(relocation_checks(&line, &spec, g, &default_f_points(), &[20.0, 30.0]));
    }
    let mut o = all_of(&rs, &["blaschke.", "thm"]);
    o.pass &= find(&rs, "blaschke.B1").tolerance == 1e-12;
    o
}

fn criterion12() -> Outcome {
    let small = scan_zeros(100.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
    let t1 = small.ordinates()[0];
    let start = Instant::now();
    let big = scan_zeros(1000.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
    let cache = CriticalLineCache::build(&big, 1000.0, DEFAULT_SPACING, DEFAULT_EXCLUSION);
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: small.len() == 29
            && small.count_consistent()
            && (t1 - 14.134725).abs() <= 1e-5
            && big.count_consistent()
            && cache.is_ok()
            && secs < 1800.0,
        detail: format!(
            "{} ordinates below 100 (consistent: {}), t1 = {t1:.9}, build to 1000 in {secs:.1}s",
            small.len(),
            small.count_consistent()
        ),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let zeros = scan_zeros(MAX_HEIGHT, DEFAULT_STEP, DEFAULT_REFINE_TOL).expect("zero scan");
    let cache = CriticalLineCache::build(&zeros, MAX_HEIGHT, DEFAULT_SPACING, DEFAULT_EXCLUSION).expect("line cache");
    let primes = build_mangoldt(1_000_000).expect("sieve");
    let d = Data { zeros, cache, primes };
    println!("data to height {MAX_HEIGHT} built in {:.1}s", start.elapsed().as_secs_f64());

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("quadrature calibration gate", Box::new(criterion1)),
        ("Γ-kernel and s² identities", Box::new(criterion2)),
        ("ζ_B, ζ_C against (s−1)/s ζ(s)", Box::new(|| criterion3(&d))),
        ("ξ(2) from the zero count", Box::new(|| criterion4(&d))),
        ("J1, J2 against γ − 1", Box::new(|| criterion5(&d))),
        ("N = N1 + N2 at mid-gap points", Box::new(|| criterion6(&d))),
        ("Mellin identities (a), (b), (c), Φ_α", Box::new(|| criterion7(&d))),
        ("prime-side Mellin identities of ζ", Box::new(|| criterion8(&d))),
        ("f11, f21 against f*", Box::new(|| criterion9(&d))),
        ("Θ formula at x = 10", Box::new(|| criterion10(&d))),
        ("synthetic zero set 0.6+14i", Box::new(|| criterion11(&d))),
        ("zero finder", Box::new(criterion12)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = f();
        failed += usize::from(!o.pass);
        println!(
            "{} criterion {:>2}: {name} [{:.1}s] {}",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            t0.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
