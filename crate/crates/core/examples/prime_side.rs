//! The prime side: a sieve of Λ(n), ψ, π*, the r-weighted sums of the Θ
//! formula, f*(x), and the Mellin identities linking them to ζ.
//!
//!     cargo run --example prime_side -- [sieve_limit]

use critline::line_integrals::QuadratureSpec;
use critline::prime_side::{build_mangoldt, f_star, f_star_by_quadrature, mellin_checks, pi_star, psi, psi_r};
use critline::Complex64;

fn main() -> critline::Result<()> {
    let limit: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1_000_000);
    let tab = build_mangoldt(limit)?;

    for x in [10.0, 100.0, 1000.0, 1e6_f64.min(limit as f64)] {
        println!("x={x:<9} ψ(x) = {:<20.12} π*(x) = {:.12}", psi(x, &tab)?, pi_star(x, &tab)?);
    }
    println!("ψ_r(10) at r = 2: {}", psi_r(10.0, Complex64::new(2.0, 0.0), &tab)?);

    println!("\nf*(x) from prime sums and by quadrature of the step functions");
    for x in [std::f64::consts::E, 10.0, 50.0] {
        println!("  x={x:<8.4} {:.15} {:.15}", f_star(x, &tab)?, f_star_by_quadrature(x, &tab)?);
    }

    println!("\nMellin identities at s = 2, α = 0.6+14i, X = {limit}");
    let spec = QuadratureSpec::default();
    for r in mellin_checks(Complex64::new(2.0, 0.0), Complex64::new(0.6, 14.0), limit as f64, &tab, &spec)? {
        println!("  {r}");
    }
    Ok(())
}
