//! ζ(s) for Re(s) > 0, Hardy's Z, ξ(s), and the cached samples of
//! log|ζ(½ + iu)| used by critical-line quadrature.

mod line_cache;
mod zeta;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use line_cache::{CriticalLineCache, Exclusion, DEFAULT_EXCLUSION, DEFAULT_SPACING};
pub use zeta::{hardy_z, log_abs_zeta_direct, xi, zeta, zeta_with_derivative};

use crate::error::{Error, Result};
use crate::special_fn::theta_exact;
use crate::zeros::{count_n, ZeroTable};

/// ζ(½ + it) rebuilt from its modulus and the phase πN(t) − ϑ(t) − π sign(t).
pub fn reconstruct_zeta_on_line(t: f64, table: &ZeroTable) -> Result<Complex64> {
    if t == 0.0 {
        return Err(Error::Domain("reconstruction needs t ≠ 0".into()));
    }
    if table.distance_to_nearest(t.abs()) < 1e-9 {
        return Err(Error::Domain(format!("t = {t} is a zero ordinate")));
    }
    let log_abs = log_abs_zeta_direct(t)?;
    let phase = PI * count_n(t, table)? as f64 - theta_exact(t) - PI * t.signum();
    Ok(Complex64::from_polar(log_abs.exp(), phase))
}
