//! The batch workflow without the binary: build versioned caches in a
//! directory, run selected check groups (reusing the caches), and write a
//! data series.
//!
//!     cargo run --example cached_run -- [out_dir]

use std::path::PathBuf;

use critline::cli::{cmd_build, cmd_series, cmd_verify, Overrides, RunConfig};

fn main() -> critline::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("critline-example"));
    let cfg = RunConfig { max_height: 500.0, truncation_t: 250.0, output_dir: dir, ..RunConfig::default() };
    let mut out = std::io::stdout();
    cmd_build(&cfg, &mut out)?;
    let checks = ["spur1", "thm24", "thm25"].map(String::from);
    let report = cmd_verify(&cfg, &checks, Overrides::default(), &mut out)?;
    println!("all pass: {}", report.all_pass());
    cmd_series(&cfg, "theta", None, &mut out)?;
    Ok(())
}
