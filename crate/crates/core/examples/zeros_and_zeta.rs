//! ζ off and on the critical line, Hardy's Z, ξ, the zero scan below a
//! height with its completeness check, and the reconstruction of ζ(½+it)
//! from log|ζ| and the zero count.
//!
//!     cargo run --example zeros_and_zeta -- [height]

use critline::zeros::{count_n, expected_count, scan_zeros, tail_bounds, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{hardy_z, reconstruct_zeta_on_line, xi, zeta};
use critline::Complex64;

fn main() -> critline::Result<()> {
    let height: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100.0);

    let s2 = Complex64::new(2.0, 0.0);
    println!("ζ(2) = {}  (π²/6 = {})", zeta(s2)?, std::f64::consts::PI.powi(2) / 6.0);
    println!("ζ(½+14i) = {}", zeta(Complex64::new(0.5, 14.0))?);
    println!("ξ(2) = {}  ξ(½+5i) = {}", xi(s2)?, xi(Complex64::new(0.5, 5.0))?);

    let table = scan_zeros(height, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    println!(
        "\n{} ordinates below {height} (smooth count {}, consistent: {})",
        table.len(),
        expected_count(height),
        table.count_consistent()
    );
    for (k, t) in table.ordinates().iter().take(5).enumerate() {
        println!("  t_{} = {t:.12}   Z(t) = {:+.2e}", k + 1, hardy_z(*t)?);
    }
    let (lead, bound) = tail_bounds(height)?;
    println!("tail estimate (log T)/(πT) = {lead:.3e}, bound {bound:.3e}");

    println!("\nN(t) and the reconstruction exp[log|ζ| + i(πN − ϑ − π)]");
    for t in [5.0, 20.0, 33.3] {
        let direct = zeta(Complex64::new(0.5, t))?;
        let rebuilt = reconstruct_zeta_on_line(t, &table)?;
        println!("  t={t:<5} N={}  |difference| = {:.2e}", count_n(t, &table)?, (direct - rebuilt).norm());
    }
    Ok(())
}
