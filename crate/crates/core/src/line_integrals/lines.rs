//! Boundary data on Re(s) = ½ consumed by the line integrals: log|F(½+iu)|
//! and the phase residual, for F = ζ (from a zero table and cache) or for the
//! rational factor of a [`ZeroRelocation`].

use std::f64::consts::PI;

use crate::blaschke::ZeroRelocation;
use crate::error::{Error, Result};
use crate::special_fn::theta_exact;
use crate::zeros::ZeroTable;
use crate::zeta_engine::{log_abs_zeta_direct, CriticalLineCache};

pub trait CriticalLine: Sync {
    /// log|F(½ + iu)| for u ≥ 0; −∞ exactly at a zero.
    fn log_abs(&self, u: f64) -> f64;
    /// Imaginary part of the boundary trace of log((s−1)/s F) minus its
    /// smooth part: πN(u) − ϑ(u) − 2arctan(2u) for ζ.
    fn phase_residual(&self, u: f64) -> f64;
    /// Positive ordinates where log_abs has a logarithmic singularity.
    fn log_singularities(&self) -> &[f64];
    /// Positive ordinates where phase_residual jumps.
    fn jumps(&self) -> &[f64];
    /// Upper limit of every half-line integral.
    fn height(&self) -> f64;
    /// Width of the initial Kronrod panels away from singular points.
    fn max_panel(&self) -> f64 {
        2.0
    }
    /// Bound on |log_abs(u)| for u ≥ height.
    fn log_envelope(&self, u: f64) -> f64;
    /// Bound on |∫_height^∞ phase_residual·k| given M = sup_{u ≥ height} u²|k(u)|.
    fn residual_tail(&self, m: f64) -> f64;
}

/// ζ on the critical line, truncated at `height`.
pub struct ZetaLine<'a> {
    zeros: &'a ZeroTable,
    cache: Option<&'a CriticalLineCache>,
    height: f64,
    ordinates: Vec<f64>,
}

/// Constant C of the envelope |log|ζ(½+iu)|| ≤ C log u used for tails.
pub const LOG_ZETA_ENVELOPE: f64 = 2.0;

impl<'a> ZetaLine<'a> {
    pub fn new(zeros: &'a ZeroTable, cache: Option<&'a CriticalLineCache>, height: f64) -> Result<Self> {
        if !(height > 0.0) {
            return Err(Error::Domain(format!("truncation height must be positive, got {height}")));
        }
        if height > zeros.height() {
            return Err(Error::OutOfRange { requested: height, available: zeros.height() });
        }
        // one extra zero above the cutoff keeps the singular panel near T symmetric
        let ordinates = zeros.below(height + 1.0).to_vec();
        Ok(ZetaLine { zeros, cache, height, ordinates })
    }

    pub fn zeros(&self) -> &ZeroTable {
        self.zeros
    }

    /// N(u) for 0 ≤ u ≤ zeros.height.
    pub fn count(&self, u: f64) -> f64 {
        self.zeros.below(u.abs()).len() as f64 * u.signum()
    }
}

impl CriticalLine for ZetaLine<'_> {
    fn log_abs(&self, u: f64) -> f64 {
        let u = u.abs();
        if let Some(c) = self.cache {
            if u <= c.height() {
                if let Ok(v) = c.log_abs_regularized(u) {
                    return v;
                }
            }
        }
        log_abs_zeta_direct(u).unwrap_or(f64::NEG_INFINITY)
    }

    fn phase_residual(&self, u: f64) -> f64 {
        PI * self.count(u) - theta_exact(u) - 2.0 * (2.0 * u).atan()
    }

    fn log_singularities(&self) -> &[f64] {
        &self.ordinates
    }

    fn jumps(&self) -> &[f64] {
        &self.ordinates
    }

    fn height(&self) -> f64 {
        self.height
    }

    fn log_envelope(&self, u: f64) -> f64 {
        LOG_ZETA_ENVELOPE * u.ln()
    }

    fn residual_tail(&self, m: f64) -> f64 {
        let t = self.height;
        m * t.ln() / (PI * t)
    }
}

/// The line data of Q(s) = Π(s−a)/Π(s−b) from a zero relocation; log|Q|
/// decays like u⁻², so the default cutoff is generous and cheap.
pub struct RelocationLine<'a> {
    reloc: &'a ZeroRelocation,
    height: f64,
    singular: Vec<f64>,
    jumps: Vec<f64>,
    envelope_coeff: f64,
}

pub const RELOCATION_HEIGHT: f64 = 5000.0;

impl<'a> RelocationLine<'a> {
    pub fn new(reloc: &'a ZeroRelocation, height: f64) -> Self {
        let singular = reloc.removed().to_vec();
        let mut jumps = singular.clone();
        jumps.extend(reloc.synthetic().zeros().iter().map(|z| z.im));
        jumps.sort_by(f64::total_cmp);
        // u²|log|Q|| is nearly constant far out; take the larger of two samples, doubled
        let c = [height, 0.5 * height].iter().map(|&u| u * u * reloc.log_abs_q(u).abs()).fold(0.0, f64::max);
        RelocationLine { reloc, height, singular, jumps, envelope_coeff: 2.0 * c }
    }

    pub fn relocation(&self) -> &ZeroRelocation {
        self.reloc
    }
}

impl CriticalLine for RelocationLine<'_> {
    fn log_abs(&self, u: f64) -> f64 {
        self.reloc.log_abs_q(u)
    }

    fn phase_residual(&self, u: f64) -> f64 {
        PI * self.reloc.count_change(u)
    }

    fn log_singularities(&self) -> &[f64] {
        &self.singular
    }

    fn jumps(&self) -> &[f64] {
        &self.jumps
    }

    fn height(&self) -> f64 {
        self.height
    }

    fn max_panel(&self) -> f64 {
        8.0
    }

    fn log_envelope(&self, u: f64) -> f64 {
        self.envelope_coeff / (u * u)
    }

    fn residual_tail(&self, _m: f64) -> f64 {
        // ΔN vanishes above the largest moved ordinate
        if self.jumps.last().is_some_and(|&t| t >= self.height) {
            f64::INFINITY
        } else {
            0.0
        }
    }
}
