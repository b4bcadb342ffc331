//! Integrals along Re(s) = ½ and the theorem-level checks built on them.

pub mod lines;
pub mod quadrature;
pub mod theorems;

pub use lines::{CriticalLine, RelocationLine, ZetaLine, LOG_ZETA_ENVELOPE, RELOCATION_HEIGHT};
pub use quadrature::{integrate_to_infinity, Estimate, HalfLine, QuadValue, QuadratureSpec};
pub use theorems::*;
