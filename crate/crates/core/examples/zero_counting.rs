//! N(t) = N₁(t) + N₂(t) at mid-gap points: the smooth part from ϑ and the
//! oscillating part from a derivative of a log|ζ| integral.
//!
//!     cargo run --example zero_counting -- [t ...]

use critline::line_integrals::{n1, n2, QuadratureSpec, ZetaLine};
use critline::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};

fn main() -> critline::Result<()> {
    let mut ts: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if ts.is_empty() {
        ts = vec![20.0, 30.0, 50.0, 75.5];
    }
    let height = 1000.0;
    let zeros = scan_zeros(height, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    let cache = CriticalLineCache::build(&zeros, height, DEFAULT_SPACING, DEFAULT_EXCLUSION)?;
    let line = ZetaLine::new(&zeros, Some(&cache), height)?;
    let spec = QuadratureSpec::default().with_truncation(height);

    println!("{:>8} {:>4} {:>12} {:>12} {:>12} {:>10}", "t", "N", "N1", "N2", "N1+N2", "±");
    for t in ts {
        match n2(&line, t, 1e-3, &spec) {
            Ok(e) => println!(
                "{t:>8} {:>4} {:>12.6} {:>12.6} {:>12.6} {:>10.2e}",
                line.count(t),
                n1(t),
                e.value,
                n1(t) + e.value,
                e.uncertainty()
            ),
            Err(err) => println!("{t:>8} skipped: {err}"),
        }
    }
    Ok(())
}
