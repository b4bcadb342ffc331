//! Builds the zero table, line cache and prime table in memory and runs every
//! check group, printing one line per record.
//!
//!     cargo run --release --example full_suite -- [max_height] [truncation_T]

use std::time::Instant;

use critline::prime_side::build_mangoldt;
use critline::suite::{run_group, SuiteData, SuiteOptions, CHECK_NAMES};
use critline::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};

fn main() -> critline::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let height = args.first().copied().unwrap_or(2000.0);
    let trunc = args.get(1).copied().unwrap_or(1000.0);

    let t0 = Instant::now();
    let zeros = scan_zeros(height, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    println!("{} zeros below {height} in {:.1}s", zeros.len(), t0.elapsed().as_secs_f64());
    let t0 = Instant::now();
    let cache = CriticalLineCache::build(&zeros, height, DEFAULT_SPACING, DEFAULT_EXCLUSION)?;
    println!("line cache in {:.1}s", t0.elapsed().as_secs_f64());
    let primes = build_mangoldt(1_000_000)?;

    let data = SuiteData { zeros: Some(&zeros), cache: Some(&cache), primes: Some(&primes), synthetic: None };
    let opts = SuiteOptions::new(trunc);
    let mut failures = 0;
    for name in CHECK_NAMES {
        let t0 = Instant::now();
        for r in run_group(name, &opts, &data)? {
            failures += usize::from(!r.pass);
            println!("{r} [{:.2}s] {}", r.seconds, r.note.as_deref().unwrap_or(""));
        }
        println!("-- {name} {:.1}s", t0.elapsed().as_secs_f64());
    }
    println!("{failures} failing records");
    Ok(())
}
