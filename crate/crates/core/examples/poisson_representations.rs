//! ζ recovered from its critical-line data: ζ_B from log|ζ|, ζ_C and ξ from
//! the zero count, together with Ω_ζ and the two integrals J₁, J₂ that
//! both equal γ − 1 when every zero lies on the line.
//!
//!     cargo run --example poisson_representations -- [T]

use critline::line_integrals::{
    gamma_minus_one, j1_j2, omega_zeta, xi_poisson, zeta_b_eval, zeta_c_eval, QuadratureSpec, ZetaLine,
};
use critline::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{xi, zeta, CriticalLineCache, DEFAULT_EXCLUSION, DEFAULT_SPACING};
use critline::Complex64;

fn main() -> critline::Result<()> {
    let t: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1000.0);
    let zeros = scan_zeros(t, DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    let cache = CriticalLineCache::build(&zeros, t, DEFAULT_SPACING, DEFAULT_EXCLUSION)?;
    let line = ZetaLine::new(&zeros, Some(&cache), t)?;
    let spec = QuadratureSpec::default().with_truncation(t);

    for s in [Complex64::new(2.0, 0.0), Complex64::new(1.5, 3.0)] {
        let target = (s - 1.0) / s * zeta(s)?;
        let b = zeta_b_eval(&line, s, &spec)?;
        let c = zeta_c_eval(&line, s, &spec)?;
        println!("s = {s}: (s−1)/s ζ(s) = {target:.12}");
        println!("  ζ_B = {:.12}  (±{:.1e} quadrature, ±{:.1e} tail)", b.value, b.err, b.tail);
        println!("  ζ_C = {:.12}  (±{:.1e} quadrature, ±{:.1e} tail)", c.value, c.err, c.tail);
    }

    let s = Complex64::new(2.0, 0.0);
    let p = xi_poisson(&line, s, &spec)?;
    println!("\nξ(2) = {:.12}, Poisson form {:.12} (tail {:.1e})", xi(s)?, p.value, p.tail);

    let om = omega_zeta(&line, &spec)?;
    let (a, b) = j1_j2(&line, &spec)?;
    println!("Ω_ζ = {:.3e} (tail {:.1e})", om.value, om.tail);
    println!("J₁ = {:.12}, J₂ = {:.12}, γ − 1 = {:.12}", a.value, b.value, gamma_minus_one());
    Ok(())
}
