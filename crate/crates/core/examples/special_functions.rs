//! The special functions behind the kernels: ϑ, Ei, li, the entire part Ei₀,
//! the Mellin kernels Φ_α, Φ̃_α and the Θ(x, α) term of the Θ formula.
//!
//!     cargo run --example special_functions

use critline::special_fn::{
    ei, ei0, li, log_gamma, phi_alpha, phi_big, phi_tilde, theta_asymptotic, theta_exact, theta_big, EULER_GAMMA,
};
use critline::Complex64;

fn main() -> critline::Result<()> {
    println!("ϑ(t): exact vs asymptotic series (t > 2π)");
    println!("  ϑ(1) = {:.15}", theta_exact(1.0));
    for t in [10.0, 14.134725, 100.0, 1000.0] {
        println!("  t={t:<10} {:>22.15} {:>22.15}", theta_exact(t), theta_asymptotic(t)?);
    }

    println!("\nEi and li");
    for x in [1.5, 2.0, 10.0, 100.0, 1e6] {
        println!("  Ei({x:<5}) = {:>22.15e}   li({x:<5}) = {:>22.15e}", ei(x)?, li(x)?);
    }

    println!("\nEi₀(z) = Ei(z) − log z − γ at complex points");
    for z in [Complex64::new(1.0, 0.0), Complex64::new(-5.0, 2.0), Complex64::new(0.5, 14.0)] {
        println!("  Ei₀({z}) = {}", ei0(z));
    }
    println!("  γ = {EULER_GAMMA}, log Γ(½+10i) = {}", log_gamma(Complex64::new(0.5, 10.0))?);

    println!("\nMellin kernels at α = 0.6+14i");
    let alpha = Complex64::new(0.6, 14.0);
    for x in [2.0, 10.0, 100.0] {
        println!(
            "  x={x:<5} φ_α = {:.6}  Φ_α = {:.6}  Φ̃_α = {:.6}  Θ(x, α) = {:.6}",
            phi_alpha(alpha, x)?,
            phi_big(alpha, x)?,
            phi_tilde(alpha, x)?,
            theta_big(x, alpha)?
        );
    }
    Ok(())
}
