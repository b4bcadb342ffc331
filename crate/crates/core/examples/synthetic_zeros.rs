//! What the identities look like with zeros off the line. A synthetic set
//! (default 0.6+14i) is swapped in for the nearest on-line zeros; B, C, the
//! f_ρ terms and every relocated identity are then checked exactly.
//!
//!     cargo run --example synthetic_zeros -- [zeros.csv]

use std::path::Path;

use critline::blaschke::{blaschke_b, c_product, f_rho_pair, SyntheticZeroSet, ZeroRelocation};
use critline::line_integrals::{
    blaschke_static_checks, default_f_points, relocation_checks, QuadratureSpec, RelocationLine, RELOCATION_HEIGHT,
};
use critline::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::Complex64;

fn main() -> critline::Result<()> {
    let zs = match std::env::args().nth(1) {
        Some(p) => SyntheticZeroSet::read_csv(Path::new(&p))?,
        None => SyntheticZeroSet::new(vec![Complex64::new(0.6, 14.0)])?,
    };
    let one = Complex64::new(1.0, 0.0);
    println!("B(1) = {:.15}, C(2) = {:.12}", blaschke_b(one, &zs)?.re, c_product(Complex64::new(2.0, 0.0), &zs)?);
    for z in zs.zeros() {
        println!("ρ = {z}: f_ρ + f_ρ̄ = {:.6e}", f_rho_pair(*z)?);
    }

    let top = zs.zeros().iter().map(|z| z.im).fold(0.0, f64::max);
    let table = scan_zeros((top + 40.0).max(60.0), DEFAULT_STEP, DEFAULT_REFINE_TOL)?;
    let reloc = ZeroRelocation::new(&zs, &table)?;
    println!("relocated: removed on-line zeros {:?}, log c = {:.12}", reloc.removed(), reloc.log_c());

    let line = RelocationLine::new(&reloc, RELOCATION_HEIGHT);
    let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-12);
    let mut records = blaschke_static_checks(&zs);
    for group in ["thm22", "thm24", "thm25", "thm33a", "thm33b", "thm34"] {
        records.extend(relocation_checks(&line, &spec, group, &default_f_points(), &[20.0, 30.0]));
    }
    for r in &records {
        println!("{r}");
    }
    println!("{} of {} pass", records.iter().filter(|r| r.pass).count(), records.len());
    Ok(())
}
