use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::zeta::log_abs_zeta_direct;
use crate::error::{Error, Result};
use crate::persist::{self, CacheHeader};
use crate::zeros::ZeroTable;

pub const DEFAULT_SPACING: f64 = 0.01;
pub const DEFAULT_EXCLUSION: f64 = 0.05;

const STENCIL: usize = 8;
// Zeros closer than this to a query point are divided out before interpolating.
const REGULARIZE_RADIUS: f64 = 2.0;
// Every n-th cell midpoint is checked against direct evaluation at build time.
const CHECK_STRIDE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exclusion {
    pub lo: f64,
    pub hi: f64,
    pub zero_ordinate: f64,
}

#[derive(Serialize, Deserialize)]
struct SampleRow {
    u: f64,
    log_abs_zeta: f64,
}

/// Samples of log|ζ(½ + iu)| on a uniform grid over [0, height], with small
/// intervals around each zero left out.
///
/// Off-grid values come from 8-point Lagrange interpolation of
/// log|ζ(½+iu)| − Σ log|u − t_n| (nearby zeros divided out), which is smooth
/// through the excluded intervals.
#[derive(Clone, Debug)]
pub struct CriticalLineCache {
    spacing: f64,
    height: f64,
    values: Vec<Option<f64>>,
    exclusions: Vec<Exclusion>,
    zeros: Vec<f64>,
    build_tol: f64,
}

fn exclusions_for(zeros: &[f64], delta: f64) -> Vec<Exclusion> {
    zeros
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let mut r = delta;
            if i > 0 {
                r = r.min(0.45 * (t - zeros[i - 1]));
            }
            if i + 1 < zeros.len() {
                r = r.min(0.45 * (zeros[i + 1] - t));
            }
            Exclusion { lo: t - r, hi: t + r, zero_ordinate: t }
        })
        .collect()
}

impl CriticalLineCache {
    /// Evaluates the grid over [0, height] (height ≤ table height).
    pub fn build(table: &ZeroTable, height: f64, spacing: f64, delta: f64) -> Result<Self> {
        if height > table.height() {
            return Err(Error::OutOfRange { requested: height, available: table.height() });
        }
        if !(spacing > 0.0 && delta > spacing) {
            return Err(Error::Domain(format!(
                "need 0 < spacing < exclusion radius, got spacing {spacing}, radius {delta}"
            )));
        }
        let zeros = table.below(height + delta).to_vec();
        let exclusions = exclusions_for(&zeros, delta);
        let n = (height / spacing).floor() as usize;
        let values: Vec<Option<f64>> = (0..=n)
            .into_par_iter()
            .map(|j| {
                let u = j as f64 * spacing;
                if find_exclusion(&exclusions, u).is_some() {
                    Ok(None)
                } else {
                    log_abs_zeta_direct(u).map(Some)
                }
            })
            .collect::<Result<_>>()?;
        let mut cache = CriticalLineCache { spacing, height, values, exclusions, zeros, build_tol: 0.0 };
        cache.build_tol = cache.measure_interpolation_error()?;
        Ok(cache)
    }

    // Worst interpolation error over every 7th cell midpoint and the points
    // just outside each exclusion, where the stencil is one-sided.
    fn measure_interpolation_error(&self) -> Result<f64> {
        let mut probes: Vec<f64> = (0..self.values.len().saturating_sub(1))
            .step_by(CHECK_STRIDE)
            .filter(|&j| self.values[j].is_some() && self.values[j + 1].is_some())
            .map(|j| (j as f64 + 0.5) * self.spacing)
            .collect();
        for e in &self.exclusions {
            for u in [e.lo - 1e-9, e.hi + 1e-9, e.lo - 0.5 * self.spacing, e.hi + 0.5 * self.spacing] {
                if u >= 0.0 && u <= self.height && find_exclusion(&self.exclusions, u).is_none() {
                    probes.push(u);
                }
            }
        }
        let errs: Vec<f64> = probes
            .par_iter()
            .map(|&u| Ok((self.interpolate(u) - log_abs_zeta_direct(u)?).abs()))
            .collect::<Result<_>>()?;
        let worst = errs.into_iter().fold(0.0, f64::max);
        Ok((2.0 * worst).max(1e-13))
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// Interpolation accuracy measured at cell midpoints during construction.
    pub fn build_tol(&self) -> f64 {
        self.build_tol
    }

    pub fn exclusions(&self) -> &[Exclusion] {
        &self.exclusions
    }

    /// Stored (u, log|ζ(½+iu)|) pairs in increasing u.
    pub fn grid(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(move |(j, v)| v.map(|v| (j as f64 * self.spacing, v)))
    }

    /// The excluded interval containing |u|, if any.
    pub fn exclusion_at(&self, u: f64) -> Option<&Exclusion> {
        find_exclusion(&self.exclusions, u.abs())
    }

    /// log|ζ(½ + iu)| to within `tol`. Interpolates when `tol` is no tighter
    /// than the measured build accuracy, else evaluates directly.
    pub fn log_abs(&self, u: f64, tol: f64) -> Result<f64> {
        let u = u.abs();
        if u > self.height {
            return Err(Error::OutOfRange { requested: u, available: self.height });
        }
        if let Some(ex) = self.exclusion_at(u) {
            return Err(Error::Singular { u, zero: ex.zero_ordinate });
        }
        if tol < self.build_tol {
            return log_abs_zeta_direct(u);
        }
        Ok(self.interpolate(u))
    }

    /// log|ζ(½ + iu)| anywhere in [0, height] except exactly at a zero, using
    /// the regularized interpolant inside excluded intervals too. This is
    /// what singular quadrature panels sample.
    pub fn log_abs_regularized(&self, u: f64) -> Result<f64> {
        let u = u.abs();
        if u > self.height {
            return Err(Error::OutOfRange { requested: u, available: self.height });
        }
        Ok(self.interpolate(u))
    }

    fn node(&self, j: i64) -> Option<(f64, f64)> {
        let idx = j.unsigned_abs() as usize;
        let v = (*self.values.get(idx)?)?;
        Some((j as f64 * self.spacing, v))
    }

    fn interpolate(&self, u: f64) -> f64 {
        let j0 = (u / self.spacing).round() as i64;
        let mut nodes: Vec<(f64, f64)> = Vec::with_capacity(32);
        for dj in -16..=16 {
            if let Some(n) = self.node(j0 + dj) {
                nodes.push(n);
            }
        }
        nodes.sort_by(|a, b| (a.0 - u).abs().total_cmp(&(b.0 - u).abs()));
        nodes.truncate(STENCIL);

        let lo = self.zeros.partition_point(|&t| t < u - REGULARIZE_RADIUS);
        let hi = self.zeros.partition_point(|&t| t <= u + REGULARIZE_RADIUS);
        let near = &self.zeros[lo..hi];
        let singular = |x: f64| near.iter().map(|&t| (x - t).abs().ln()).sum::<f64>();

        let mut acc = 0.0;
        for (i, &(xi, yi)) in nodes.iter().enumerate() {
            let mut w = 1.0;
            for (k, &(xk, _)) in nodes.iter().enumerate() {
                if k != i {
                    w *= (u - xk) / (xi - xk);
                }
            }
            acc += w * (yi - singular(xi));
        }
        acc + singular(u)
    }

    pub fn write_csv(&self, samples: &Path, exclusions: &Path, header: CacheHeader) -> Result<()> {
        let header = header
            .with("spacing", self.spacing)
            .with("height", self.height)
            .with("build_tol", self.build_tol);
        persist::write_csv(samples, &header, |w| {
            for (u, v) in self.grid() {
                w.serialize(SampleRow { u, log_abs_zeta: v })?;
            }
            Ok(())
        })?;
        let mut ex_header = header.clone();
        ex_header.kind = format!("{}_exclusions", header.kind);
        persist::write_csv(exclusions, &ex_header, |w| {
            for e in &self.exclusions {
                w.serialize(e)?;
            }
            Ok(())
        })
    }

    pub fn read_csv(samples: &Path, exclusions: &Path) -> Result<(CacheHeader, Self)> {
        let (header, mut reader) = persist::read_csv(samples)?;
        let spacing = header.get_f64("spacing")?;
        let height = header.get_f64("height")?;
        let build_tol = header.get_f64("build_tol")?;
        let n = (height / spacing).floor() as usize;
        let mut values = vec![None; n + 1];
        for row in reader.deserialize::<SampleRow>() {
            let row = row?;
            let j = (row.u / spacing).round() as usize;
            if j > n {
                return Err(Error::Cache {
                    path: samples.display().to_string(),
                    reason: format!("sample at u = {} lies above the stated height", row.u),
                });
            }
            values[j] = Some(row.log_abs_zeta);
        }
        let (ex_header, mut ex_reader) = persist::read_csv(exclusions)?;
        if ex_header.config_hash != header.config_hash {
            return Err(Error::Cache {
                path: exclusions.display().to_string(),
                reason: "exclusion file does not match the sample file".into(),
            });
        }
        let exclusions: Vec<Exclusion> = ex_reader.deserialize().collect::<std::result::Result<_, _>>()?;
        let zeros = exclusions.iter().map(|e| e.zero_ordinate).collect();
        Ok((header, CriticalLineCache { spacing, height, values, exclusions, zeros, build_tol }))
    }
}

fn find_exclusion(exclusions: &[Exclusion], u: f64) -> Option<&Exclusion> {
    let i = exclusions.partition_point(|e| e.hi < u);
    exclusions.get(i).filter(|e| e.lo <= u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::{scan_zeros, DEFAULT_REFINE_TOL, DEFAULT_STEP};

    fn cache(height: f64) -> CriticalLineCache {
        let table = scan_zeros(height, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
        CriticalLineCache::build(&table, height, DEFAULT_SPACING, DEFAULT_EXCLUSION).unwrap()
    }

    #[test]
    fn grid_invariants() {
        let c = cache(60.0);
        let pts: Vec<(f64, f64)> = c.grid().collect();
        assert!(pts.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(pts.iter().all(|&(u, _)| c.exclusion_at(u).is_none()));
        for e in c.exclusions() {
            assert!(e.lo < e.zero_ordinate && e.zero_ordinate < e.hi);
        }
        assert!(c.build_tol() < 1e-9, "build tol {}", c.build_tol());
    }

    #[test]
    fn interpolation_matches_direct() {
        let c = cache(60.0);
        let tol = c.build_tol();
        let mut u = 0.003;
        while u < 60.0 {
            if c.exclusion_at(u).is_none() {
                let got = c.log_abs(u, tol).unwrap();
                let want = log_abs_zeta_direct(u).unwrap();
                assert!((got - want).abs() <= 2.0 * tol, "u = {u}: {got} vs {want}");
            }
            u += 0.0937;
        }
    }

    #[test]
    fn regularized_values_inside_exclusions() {
        let c = cache(80.0);
        let mut worst = 0.0f64;
        for e in c.exclusions() {
            // Ordinates carry ~1e-12 bisection error, so stay a few 1e-3 away.
            for frac in [-0.9, -0.5, -0.1, 0.05, 0.2, 0.7] {
                let u = e.zero_ordinate + frac * (e.hi - e.zero_ordinate);
                let got = c.log_abs_regularized(u).unwrap();
                let want = log_abs_zeta_direct(u).unwrap();
                worst = worst.max((got - want).abs());
            }
        }
        assert!(worst < 1e-9, "worst gap error {worst:e}");
    }

    #[test]
    fn evenness_singularity_and_origin() {
        let c = cache(30.0);
        let tol = c.build_tol();
        assert!((c.log_abs(0.0, tol).unwrap() - 1.460_354_508_809_586_8f64.ln()).abs() < 1e-12);
        for u in [1.0, 10.0] {
            assert_eq!(c.log_abs(-u, tol).unwrap(), c.log_abs(u, tol).unwrap());
        }
        assert!(matches!(c.log_abs(14.134_725, tol), Err(Error::Singular { .. })));
        assert!(matches!(c.log_abs(31.0, tol), Err(Error::OutOfRange { .. })));
    }
}
