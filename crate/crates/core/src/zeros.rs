//! Critical-line zeros found as sign changes of Hardy's Z, the counting
//! function N(t), and the leading-term tail estimates used for truncation.

use std::f64::consts::PI;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::persist::{self, CacheHeader};
use crate::special_fn::theta_exact;
use crate::zeta_engine::hardy_z;

/// Smallest scan ceiling accepted; t₁ ≈ 14.13 is the first ordinate.
pub const MIN_SCAN_HEIGHT: f64 = 14.0;
pub const DEFAULT_STEP: f64 = 0.05;
pub const DEFAULT_REFINE_TOL: f64 = 1e-12;
const MAX_RETRIES: usize = 3;

#[derive(Clone, Debug)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    brackets: Vec<(f64, f64)>,
    height: f64,
    count_consistent: bool,
    gaps: Vec<(f64, f64)>,
}

#[derive(Serialize, Deserialize)]
struct ZeroRow {
    index: usize,
    t: f64,
    bracket_lo: f64,
    bracket_hi: f64,
}

/// Expected number of ordinates in (0, T] from the smooth count.
pub fn expected_count(height: f64) -> usize {
    (theta_exact(height) / PI + 1.0).round().max(0.0) as usize
}

impl ZeroTable {
    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn brackets(&self) -> &[(f64, f64)] {
        &self.brackets
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn count_consistent(&self) -> bool {
        self.count_consistent
    }

    /// Suspiciously long gaps between consecutive ordinates (reported when
    /// the count certificate fails).
    pub fn gaps(&self) -> &[(f64, f64)] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Ordinates no larger than `t`.
    pub fn below(&self, t: f64) -> &[f64] {
        &self.ordinates[..self.ordinates.partition_point(|&x| x <= t)]
    }

    /// Distance from `t` to the nearest ordinate.
    pub fn distance_to_nearest(&self, t: f64) -> f64 {
        let i = self.ordinates.partition_point(|&x| x < t);
        let mut d = f64::INFINITY;
        if i < self.ordinates.len() {
            d = d.min(self.ordinates[i] - t);
        }
        if i > 0 {
            d = d.min(t - self.ordinates[i - 1]);
        }
        d
    }

    /// Builds a table from known ordinates (brackets collapse to the points).
    pub fn from_ordinates(mut ordinates: Vec<f64>, height: f64) -> Self {
        ordinates.sort_by(f64::total_cmp);
        let brackets = ordinates.iter().map(|&t| (t, t)).collect();
        let count_consistent = ordinates.len() == expected_count(height);
        ZeroTable { ordinates, brackets, height, count_consistent, gaps: Vec::new() }
    }

    pub fn write_csv(&self, path: &Path, header: CacheHeader) -> Result<()> {
        let header = header.with("height", self.height).with("consistent", self.count_consistent);
        persist::write_csv(path, &header, |w| {
            for (i, (&t, &(lo, hi))) in self.ordinates.iter().zip(&self.brackets).enumerate() {
                w.serialize(ZeroRow { index: i + 1, t, bracket_lo: lo, bracket_hi: hi })?;
            }
            Ok(())
        })
    }

    /// Loads a table and re-certifies every bracket by evaluating Z at its ends.
    pub fn read_csv(path: &Path) -> Result<(CacheHeader, Self)> {
        let (header, mut reader) = persist::read_csv(path)?;
        let height = header.get_f64("height")?;
        let mut ordinates = Vec::new();
        let mut brackets = Vec::new();
        for row in reader.deserialize::<ZeroRow>() {
            let row = row?;
            ordinates.push(row.t);
            brackets.push((row.bracket_lo, row.bracket_hi));
        }
        let certified: Result<Vec<bool>> = brackets
            .par_iter()
            .map(|&(lo, hi)| Ok(hardy_z(lo)? * hardy_z(hi)? < 0.0))
            .collect();
        if let Some(bad) = certified?.iter().position(|ok| !ok) {
            return Err(Error::Cache {
                path: path.display().to_string(),
                reason: format!("bracket of zero {} has no sign change", bad + 1),
            });
        }
        let count_consistent = ordinates.len() == expected_count(height);
        let gaps = long_gaps(&ordinates, height);
        Ok((header, ZeroTable { ordinates, brackets, height, count_consistent, gaps }))
    }
}

/// Scans (0, T] for sign changes of Z on a grid, refines each by bisection to
/// width ≤ `refine_tol`, and certifies completeness against round(ϑ(T)/π + 1).
/// On a count mismatch the step is halved up to three times; if the count
/// still disagrees the table is returned with `count_consistent = false`.
pub fn scan_zeros(height: f64, step: f64, refine_tol: f64) -> Result<ZeroTable> {
    if !(height >= MIN_SCAN_HEIGHT) || !height.is_finite() {
        return Err(Error::Domain(format!(
            "scan height must be at least {MIN_SCAN_HEIGHT}, got {height}"
        )));
    }
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::Domain(format!("scan step must lie in (0, 0.1], got {step}")));
    }
    if !(refine_tol > 0.0) {
        return Err(Error::Domain(format!("refine_tol must be positive, got {refine_tol}")));
    }
    let expected = expected_count(height);
    let mut step = step;
    let mut table = scan_once(height, step, refine_tol)?;
    for _ in 0..MAX_RETRIES {
        if table.ordinates.len() == expected {
            break;
        }
        step /= 2.0;
        table = scan_once(height, step, refine_tol)?;
    }
    table.count_consistent = table.ordinates.len() == expected;
    if !table.count_consistent {
        table.gaps = long_gaps(&table.ordinates, height);
    }
    Ok(table)
}

fn scan_once(height: f64, step: f64, refine_tol: f64) -> Result<ZeroTable> {
    let n = (height / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| if i == n { height } else { i as f64 * step }).collect();
    let values: Vec<f64> = grid.par_iter().map(|&t| hardy_z(t)).collect::<Result<_>>()?;
    let sign_changes: Vec<usize> =
        (0..n).filter(|&i| values[i] != 0.0 && values[i] * values[i + 1] <= 0.0).collect();
    let refined: Vec<(f64, f64, f64)> = sign_changes
        .par_iter()
        .map(|&i| bisect(grid[i], grid[i + 1], values[i], values[i + 1], refine_tol))
        .collect::<Result<_>>()?;
    let ordinates = refined.iter().map(|r| r.2).collect();
    let refined = refined.iter().map(|r| (r.0, r.1)).collect();
    Ok(ZeroTable { ordinates, brackets: refined, height, count_consistent: false, gaps: Vec::new() })
}

// Bisection to width ≤ tol; the ordinate is then the secant root inside the
// final bracket, which is far more accurate than the bracket midpoint.
fn bisect(mut lo: f64, mut hi: f64, z_lo: f64, z_hi: f64, tol: f64) -> Result<(f64, f64, f64)> {
    let (mut zl, mut zh) = (z_lo, z_hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let z = hardy_z(mid)?;
        if z == 0.0 {
            return Ok((mid, mid, mid));
        }
        if (z > 0.0) == (zl > 0.0) {
            lo = mid;
            zl = z;
        } else {
            hi = mid;
            zh = z;
        }
    }
    let root = if zh == zl { 0.5 * (lo + hi) } else { (lo - zl * (hi - lo) / (zh - zl)).clamp(lo, hi) };
    Ok((lo, hi, root))
}

fn long_gaps(ordinates: &[f64], height: f64) -> Vec<(f64, f64)> {
    let mut pts = vec![MIN_SCAN_HEIGHT.min(ordinates.first().copied().unwrap_or(height))];
    pts.extend_from_slice(ordinates);
    pts.push(height);
    pts.windows(2)
        .filter(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            let mean = 2.0 * PI / (mid / (2.0 * PI)).ln().max(0.5);
            w[1] - w[0] > 1.8 * mean
        })
        .map(|w| (w[0], w[1]))
        .collect()
}

/// N(t): number of ordinates ≤ t, extended as an odd function.
pub fn count_n(t: f64, table: &ZeroTable) -> Result<i64> {
    if !(t.abs() <= table.height) {
        return Err(Error::OutOfRange { requested: t.abs(), available: table.height });
    }
    let n = table.below(t.abs()).len() as i64;
    Ok(if t < 0.0 { -n } else { n })
}

/// Leading terms (log T)/(πT) of Σ_{|Im ρ|>T} 1/|Im ρ|² and ϑ(T)/π of N(T).
pub fn tail_bounds(height: f64) -> Result<(f64, f64)> {
    if !(height >= 100.0) {
        return Err(Error::Domain(format!("tail bounds need T ≥ 100, got {height}")));
    }
    Ok((height.ln() / (PI * height), theta_exact(height) / PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zero_and_small_heights() {
        let t15 = scan_zeros(15.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
        assert_eq!(t15.len(), 1);
        assert!((t15.ordinates()[0] - 14.134_725_141_734_694).abs() < 1e-9);
        let (lo, hi) = t15.brackets()[0];
        assert!(hi - lo <= DEFAULT_REFINE_TOL);
        assert!(hardy_z(lo).unwrap() * hardy_z(hi).unwrap() < 0.0);
        let t14 = scan_zeros(14.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
        assert!(t14.is_empty());
        assert!(t14.count_consistent());
        assert!(scan_zeros(10.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).is_err());
        assert!(scan_zeros(50.0, 0.2, DEFAULT_REFINE_TOL).is_err());
    }

    #[test]
    fn counting_function() {
        let table = scan_zeros(100.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap();
        assert_eq!(table.len(), 29);
        assert!(table.count_consistent());
        assert!((table.ordinates()[28] - 98.831_194_218_193_69).abs() < 1e-9);
        assert_eq!(count_n(20.0, &table).unwrap(), 1);
        assert_eq!(count_n(0.0, &table).unwrap(), 0);
        assert_eq!(count_n(-20.0, &table).unwrap(), -1);
        assert_eq!(count_n(30.0, &table).unwrap(), 3);
        assert!(count_n(101.0, &table).is_err());
        for t in [50.0, 100.0] {
            let n = count_n(t, &table).unwrap() as f64;
            assert!((n - theta_exact(t) / PI - 1.0).abs() <= 2.0);
        }
    }

    #[test]
    fn tail_terms() {
        let (a, _) = tail_bounds(100.0).unwrap();
        assert!((a - 0.014_658_711_977_588_557).abs() < 1e-15);
        let (b, _) = tail_bounds(1000.0).unwrap();
        assert!((b - 0.002_198_806_796_638_283).abs() < 1e-15);
        assert!(tail_bounds(50.0).is_err());
    }
}
