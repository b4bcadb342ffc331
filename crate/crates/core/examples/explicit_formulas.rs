//! The explicit formulas: f*(x) from primes against its two critical-line
//! forms f₁₁ (zero count) and f₂₁ (log|ζ|), and the Θ formula at (x, r).
//!
//!     cargo run --example explicit_formulas -- [x]

use critline::line_integrals::{f11, f21, theorem34_check, QuadratureSpec, ZetaLine};
use critline::prime_side::{build_mangoldt, f_star};
use critline::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};
use critline::Complex64;

fn main() -> critline::Result<()> {
    let xs: Vec<f64> = match std::env::args().nth(1).and_then(|a| a.parse().ok()) {
        Some(x) => vec![x],
        None => vec![std::f64::consts::E, 10.0, 50.0],
    };
    let height = 2000.0;
    let zeros = scan_zeros(height, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    let cache = CriticalLineCache::build(&zeros, height, DEFAULT_SPACING, DEFAULT_EXCLUSION)?;
    let line = ZetaLine::new(&zeros, Some(&cache), height)?;
    let spec = QuadratureSpec::default().with_truncation(height);
    let tab = build_mangoldt(100_000)?;

    println!("{:>8} {:>18} {:>18} {:>18}", "x", "f*", "f11", "f21");
    for &x in &xs {
        let a = f11(&line, x, &spec)?;
        let b = f21(&line, x, &spec)?;
        println!("{x:>8.4} {:>18.12} {:>18.12} {:>18.12}", f_star(x, &tab)?, a.value, b.value);
    }

    println!("\nΘ formula, prime side against critical-line side");
    for r in [Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0)] {
        for rec in theorem34_check(&line, xs[xs.len().min(2) - 1], r, &tab, &spec, 0.05) {
            println!("  {rec}");
        }
    }
    Ok(())
}
