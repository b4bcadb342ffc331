use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use critline::cli::{cmd_build, cmd_series, cmd_verify, parse_complex, Overrides, RunConfig, SERIES_NAMES};
use critline::Complex64;

#[derive(Parser)]
#[command(name = "critline", version, about = "Critical-line integrals and explicit prime formulas for ζ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Ceiling of the zero scan and the line cache
    #[arg(long, default_value_t = 2000.0)]
    max_height: f64,
    /// Cutoff T of the half-line integrals
    #[arg(long = "truncation-T", default_value_t = 1000.0)]
    truncation_t: f64,
    #[arg(long, default_value_t = 1_000_000)]
    sieve_limit: u64,
    /// Absolute quadrature tolerance
    #[arg(long, default_value_t = 1e-10)]
    abs_tol: f64,
    /// Relative quadrature tolerance
    #[arg(long, default_value_t = 1e-12)]
    rel_tol: f64,
    /// CSV of sigma,tau rows for the relocation checks
    #[arg(long, value_name = "CSV")]
    synthetic_zeros: Option<PathBuf>,
    /// Directory for caches and reports
    #[arg(long, value_name = "DIR", default_value = "critline-out")]
    out: PathBuf,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            max_height: self.max_height,
            truncation_t: self.truncation_t,
            sieve_limit: self.sieve_limit,
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            synthetic_zeros: self.synthetic_zeros.clone(),
            output_dir: self.out.clone(),
        }
    }
}

#[derive(Args)]
struct Points {
    #[arg(long)]
    x: Option<f64>,
    /// Complex point, e.g. 2 or 1.5+3i
    #[arg(long, value_parser = complex)]
    s: Option<Complex64>,
    #[arg(long, value_parser = complex)]
    r: Option<Complex64>,
    #[arg(long)]
    t: Option<f64>,
}

fn complex(text: &str) -> Result<Complex64, String> {
    parse_complex(text).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Scan zeros, sample log|ζ| on the line and sieve primes into --out
    Build(Common),
    /// Run check groups and write report.csv plus per-check JSON
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated check names; empty runs all
        #[arg(long, value_delimiter = ',', default_value = "")]
        checks: Vec<String>,
        #[command(flatten)]
        points: Points,
    },
    /// Write a plot-ready series_<what>.csv with columns arg,value,err_est
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(value_parser = SERIES_NAMES)]
        what: String,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match &cli.command {
        Command::Build(common) => cmd_build(&common.config(), &mut out).map(|_| true),
        Command::Verify { common, checks, points } => {
            let checks: Vec<String> = checks.iter().filter(|c| !c.is_empty()).cloned().collect();
            let ov = Overrides { x: points.x, s: points.s, r: points.r, t: points.t };
            cmd_verify(&common.config(), &checks, ov, &mut out).map(|r| r.all_pass())
        }
        Command::Series { common, what, from, to, step } => {
            let range = match (from, to, step) {
                (None, None, None) => None,
                _ => {
                    let (f, t, s) = critline::cli::default_range(what);
                    Some((from.unwrap_or(f), to.unwrap_or(t), step.unwrap_or(s)))
                }
            };
            cmd_series(&common.config(), what, range, &mut out).map(|_| true)
        }
    };
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
