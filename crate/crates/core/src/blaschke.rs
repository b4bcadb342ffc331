//! Objects indexed by hypothetical zeros off the critical line: the Blaschke
//! product B, its symmetric counterpart C, f_ρ, the Φ̃ sums of the cosine and
//! sine explicit formulas, N₃ / N_B, and the Θ zero sum.
//!
//! [`ZeroRelocation`] turns a synthetic set into a concrete function
//! ζ·G, where G moves on-line zeros to the synthetic positions, so that the
//! line-integral identities can be exercised with a non-empty set.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::line_integrals::{HalfLine, QuadratureSpec};
use crate::special_fn::{phi_big, phi_tilde, theta_big};
use crate::zeros::ZeroTable;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Upper-half-plane representatives ρ = σ + iτ with ½ < σ ≤ 1, τ > 0; every
/// sum and product runs over ρ and ρ̄.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SyntheticZeroSet {
    zeros: Vec<Complex64>,
}

#[derive(Deserialize)]
struct SigmaTau {
    sigma: f64,
    tau: f64,
}

impl SyntheticZeroSet {
    pub fn empty() -> Self {
        SyntheticZeroSet::default()
    }

    /// Validates σ ∈ (½, 1] and τ ≠ 0; a negative τ is replaced by its
    /// conjugate representative.
    pub fn new(zeros: Vec<Complex64>) -> Result<Self> {
        let mut out = Vec::with_capacity(zeros.len());
        for z in zeros {
            if !(z.re > 0.5 && z.re <= 1.0) || z.im == 0.0 || !z.im.is_finite() {
                return Err(Error::Domain(format!(
                    "synthetic zero {z} needs ½ < σ ≤ 1 and τ ≠ 0"
                )));
            }
            out.push(if z.im < 0.0 { z.conj() } else { z });
        }
        Ok(SyntheticZeroSet { zeros: out })
    }

    /// Reads `sigma,tau` rows.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_path(path)?;
        let mut zeros = Vec::new();
        for row in reader.deserialize::<SigmaTau>() {
            let row = row?;
            zeros.push(c(row.sigma, row.tau));
        }
        SyntheticZeroSet::new(zeros)
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// ρ and ρ̄ for every representative.
    pub fn with_conjugates(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.zeros.iter().flat_map(|&z| [z, z.conj()])
    }
}

fn reflect(rho: Complex64) -> Complex64 {
    1.0 - rho.conj()
}

/// B(s) = Π (1 − s/ρ)/(1 − s/(1−ρ̄)) · |ρ/(1−ρ)| for Re(s) ≥ ½.
pub fn blaschke_b(s: Complex64, zs: &SyntheticZeroSet) -> Result<Complex64> {
    if s.re < 0.5 {
        return Err(Error::Domain(format!("B is evaluated for Re(s) ≥ ½, got {s}")));
    }
    let mut prod = c(1.0, 0.0);
    for rho in zs.with_conjugates() {
        let refl = reflect(rho);
        let den = 1.0 - s / refl;
        if den.norm() == 0.0 {
            return Err(Error::Pole(format!("B has a pole at {refl}")));
        }
        prod *= (1.0 - s / rho) / den * (rho.norm() / (1.0 - rho).norm());
    }
    Ok(prod)
}

/// B'(s)/B(s) = Σ [1/(s−ρ) − 1/(s−(1−ρ̄))].
pub fn blaschke_log_derivative(s: Complex64, zs: &SyntheticZeroSet) -> Complex64 {
    zs.with_conjugates().map(|rho| (s - rho).inv() - (s - reflect(rho)).inv()).sum()
}

fn midpoint(rho: Complex64) -> Complex64 {
    (reflect(rho) + rho) / 2.0
}

/// C(s) = Π (1 − s/ρ)(1 − s/(1−ρ̄)) / (1 − 2s/(1−ρ̄+ρ))².
pub fn c_product(s: Complex64, zs: &SyntheticZeroSet) -> Result<Complex64> {
    if s.re < 0.5 {
        return Err(Error::Domain(format!("C is evaluated for Re(s) ≥ ½, got {s}")));
    }
    let mut prod = c(1.0, 0.0);
    for rho in zs.with_conjugates() {
        let den = 1.0 - s / midpoint(rho);
        if den.norm() == 0.0 {
            return Err(Error::Pole(format!("C has a pole at {}", midpoint(rho))));
        }
        prod *= (1.0 - s / rho) * (1.0 - s / reflect(rho)) / (den * den);
    }
    Ok(prod)
}

/// C'(s)/C(s) = Σ [1/(s−ρ) + 1/(s−(1−ρ̄)) − 2/(s − (1−ρ̄+ρ)/2)].
pub fn c_log_derivative(s: Complex64, zs: &SyntheticZeroSet) -> Complex64 {
    zs.with_conjugates()
        .map(|rho| (s - rho).inv() + (s - reflect(rho)).inv() - 2.0 * (s - midpoint(rho)).inv())
        .sum()
}

/// Closed form of C'_ρ(1)/C_ρ(1) + C'_ρ̄(1)/C_ρ̄(1).
pub fn c_pair_log_derivative_at_one(rho: Complex64) -> f64 {
    let (s, t) = (rho.re, rho.im);
    let t2 = t * t;
    -2.0 * (3.0 * t2 - s * (1.0 - s)) * (s - 0.5).powi(2)
        / (((1.0 - s).powi(2) + t2) * (s * s + t2) * (0.25 + t2))
}

fn check_pair_domain(rho: Complex64) -> Result<()> {
    if !(rho.re > 0.5 && rho.re <= 1.0 && rho.im.abs() > 1.0) {
        return Err(Error::Domain(format!("f_ρ needs ½ < σ ≤ 1 and |τ| > 1, got {rho}")));
    }
    Ok(())
}

/// f_ρ = 2 log|ρ/(1−ρ)| + 1/(1−ρ) − 1/ρ̄.
pub fn f_rho(rho: Complex64) -> Result<Complex64> {
    check_pair_domain(rho)?;
    Ok(2.0 * (rho.norm() / (1.0 - rho).norm()).ln() + (1.0 - rho).inv() - rho.conj().inv())
}

/// f_ρ + f_ρ̄, which is real and positive.
pub fn f_rho_pair(rho: Complex64) -> Result<f64> {
    Ok((f_rho(rho)? + f_rho(rho.conj())?).re)
}

fn real_part_checked(z: Complex64, what: &str) -> f64 {
    debug_assert!(z.im.abs() <= 1e-10 * z.re.abs().max(1.0), "{what} has imaginary residue {}", z.im);
    z.re
}

/// f₁₂(x) = −Σ [Φ̃_ρ + Φ̃_{1−ρ̄} − 2Φ̃_{½(1+ρ−ρ̄)}].
pub fn f12_sum(x: f64, zs: &SyntheticZeroSet) -> Result<f64> {
    let mut acc = c(0.0, 0.0);
    for rho in zs.with_conjugates() {
        acc -= phi_tilde(rho, x)? + phi_tilde(reflect(rho), x)? - 2.0 * phi_tilde(midpoint(rho), x)?;
    }
    Ok(real_part_checked(acc, "f12"))
}

/// f₂₂(x) = −Σ [Φ̃_ρ − Φ̃_{1−ρ̄}].
pub fn f22_sum(x: f64, zs: &SyntheticZeroSet) -> Result<f64> {
    let mut acc = c(0.0, 0.0);
    for rho in zs.with_conjugates() {
        acc -= phi_tilde(rho, x)? - phi_tilde(reflect(rho), x)?;
    }
    Ok(real_part_checked(acc, "f22"))
}

/// Σ {Θ(x, ρ−r) − Θ(x, 1−ρ̄−r)} over ρ and ρ̄.
pub fn theorem34_zero_sum(x: f64, r: Complex64, zs: &SyntheticZeroSet) -> Result<Complex64> {
    let mut acc = c(0.0, 0.0);
    for rho in zs.with_conjugates() {
        acc += theta_big(x, rho - r)? - theta_big(x, reflect(rho) - r)?;
    }
    Ok(acc)
}

/// N₃(t) = (1/2π)∫_{−t}^{t} B'/B(½+iu) du by quadrature of the closed-form
/// logarithmic derivative (real on the line), and N_B(t) = #{ρ, ρ̄ : |Im| ≤ t}.
pub fn n3_and_nb(t: f64, zs: &SyntheticZeroSet, spec: &QuadratureSpec) -> Result<(f64, i64)> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("N₃ needs t > 0, got {t}")));
    }
    if zs.zeros().iter().any(|z| (z.im.abs() - t).abs() <= 1e-12 * t.max(1.0)) {
        return Err(Error::Domain(format!("t = {t} coincides with a synthetic ordinate")));
    }
    if zs.is_empty() {
        return Ok((0.0, 0));
    }
    let centres: Vec<f64> = zs.with_conjugates().map(|z| z.im).collect();
    let f = |u: f64| blaschke_log_derivative(c(0.5, u), zs).re;
    let est = HalfLine::new(-t, t).jumps(&centres).max_panel(0.25).integrate(spec, f)?;
    let nb = 2 * zs.zeros().iter().filter(|z| z.im <= t).count() as i64;
    Ok((est.value / (2.0 * PI), nb))
}

/// Closed form of N₃: −(1/π) Σ_{ρ,ρ̄} [arctan((t−τ)/a) + arctan((t+τ)/a)], a = σ − ½.
pub fn n3_closed_form(t: f64, zs: &SyntheticZeroSet) -> f64 {
    -zs.with_conjugates()
        .map(|z| {
            let a = z.re - 0.5;
            ((t - z.im) / a).atan() + ((t + z.im) / a).atan()
        })
        .sum::<f64>()
        / PI
}

/// ζ(s)·G(s) with G(s) = Π_a (1 − s/a) / Π_b (1 − s/b): the synthetic zeros
/// a ∈ {ρ, ρ̄, 1−ρ, 1−ρ̄} are added and, for each representative, the two
/// on-line zeros b = ½ ± it_j nearest to τ are removed.
///
/// G(1) = 1, and G = Q/c with Q(s) = Π(s−a)/Π(s−b) → 1 at infinity and
/// c = Πa/Πb > 0, so log|Q(½+iu)| = O(u⁻²) carries all the line data.
#[derive(Clone, Debug)]
pub struct ZeroRelocation {
    synthetic: SyntheticZeroSet,
    removed: Vec<f64>,
    added: Vec<Complex64>,
    log_c: f64,
}

impl ZeroRelocation {
    pub fn new(zs: &SyntheticZeroSet, table: &ZeroTable) -> Result<Self> {
        let mut removed: Vec<f64> = Vec::new();
        let ords = table.ordinates();
        for z in zs.zeros() {
            let mut candidates: Vec<f64> =
                ords.iter().copied().filter(|t| !removed.contains(t)).collect();
            if candidates.len() < 2 {
                return Err(Error::Domain("zero table too short to relocate zeros".into()));
            }
            candidates.sort_by(|a, b| (a - z.im).abs().total_cmp(&(b - z.im).abs()));
            removed.extend_from_slice(&candidates[..2]);
        }
        removed.sort_by(f64::total_cmp);
        let added: Vec<Complex64> =
            zs.zeros().iter().flat_map(|&z| [z, z.conj(), 1.0 - z, 1.0 - z.conj()]).collect();
        let log_num: f64 = added.iter().map(|a| a.norm().ln()).sum();
        let log_den: f64 = removed.iter().map(|t| 2.0 * (0.25 + t * t).sqrt().ln()).sum();
        Ok(ZeroRelocation { synthetic: zs.clone(), removed, added, log_c: log_num - log_den })
    }

    pub fn synthetic(&self) -> &SyntheticZeroSet {
        &self.synthetic
    }

    /// Removed on-line ordinates, increasing.
    pub fn removed(&self) -> &[f64] {
        &self.removed
    }

    /// Added zeros a (four per representative).
    pub fn added(&self) -> &[Complex64] {
        &self.added
    }

    /// Removed zeros b = ½ ± it_j.
    pub fn removed_points(&self) -> Vec<Complex64> {
        self.removed.iter().flat_map(|&t| [c(0.5, t), c(0.5, -t)]).collect()
    }

    /// log c with c = Πa / Πb.
    pub fn log_c(&self) -> f64 {
        self.log_c
    }

    /// log G(s) (principal logs of each factor).
    pub fn log_g(&self, s: Complex64) -> Complex64 {
        let num: Complex64 = self.added.iter().map(|&a| (1.0 - s / a).ln()).sum();
        let den: Complex64 = self.removed_points().iter().map(|&b| (1.0 - s / b).ln()).sum();
        num - den
    }

    /// G'(s)/G(s).
    pub fn log_derivative(&self, s: Complex64) -> Complex64 {
        let num: Complex64 = self.added.iter().map(|&a| (s - a).inv()).sum();
        let den: Complex64 = self.removed_points().iter().map(|&b| (s - b).inv()).sum();
        num - den
    }

    /// log|Q(½ + iu)| = Σ_a log|s−a| − Σ_b log|s−b|, paired to avoid the
    /// cancellation of large logarithms at large u.
    pub fn log_abs_q(&self, u: f64) -> f64 {
        let s = c(0.5, u);
        let bs = self.removed_points();
        self.added
            .iter()
            .zip(&bs)
            .map(|(&a, &b)| {
                let da = s - a;
                let db = s - b;
                let diff = (da.re - db.re) * (da.re + db.re) + (da.im - db.im) * (da.im + db.im);
                0.5 * (diff / db.norm_sqr()).ln_1p()
            })
            .sum()
    }

    /// ΔN(u) = 2·#{τ ≤ u} − #{t_j ≤ u} for u ≥ 0, odd.
    pub fn count_change(&self, u: f64) -> f64 {
        let v = u.abs();
        let added = 2 * self.synthetic.zeros().iter().filter(|z| z.im <= v).count() as i64;
        let removed = self.removed.iter().filter(|&&t| t <= v).count() as i64;
        (added - removed) as f64 * u.signum()
    }

    /// Mellin-side counterpart of log G: f_G(x) = −Σ_a Φ_a(x) + Σ_b Φ_b(x).
    pub fn f_g(&self, x: f64) -> Result<f64> {
        let mut acc = c(0.0, 0.0);
        for &a in &self.added {
            acc -= phi_big(a, x)?;
        }
        for b in self.removed_points() {
            acc += phi_big(b, x)?;
        }
        Ok(real_part_checked(acc, "f_G"))
    }

    /// Prime side of the Θ explicit formula for the factor Q = c·G:
    /// −Σ_a Θ(x, a−r) + Σ_b Θ(x, b−r). The constant c is part of it; for G
    /// alone subtract log c·log x (∫_ℝ K(x,r,u) du = log x).
    pub fn theta_side(&self, x: f64, r: Complex64) -> Result<Complex64> {
        let mut acc = c(0.0, 0.0);
        for &a in &self.added {
            acc -= theta_big(x, a - r)?;
        }
        for b in self.removed_points() {
            acc += theta_big(x, b - r)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_integrals::quadrature::gauss_kronrod;

    fn zs() -> SyntheticZeroSet {
        SyntheticZeroSet::new(vec![c(0.6, 14.0)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SyntheticZeroSet::new(vec![c(0.5, 3.0)]).is_err());
        assert!(SyntheticZeroSet::new(vec![c(0.7, 0.0)]).is_err());
        assert!(SyntheticZeroSet::new(vec![c(1.2, 3.0)]).is_err());
        let s = SyntheticZeroSet::new(vec![c(0.7, -3.0)]).unwrap();
        assert_eq!(s.zeros()[0], c(0.7, 3.0));
    }

    #[test]
    fn empty_set_identities() {
        let e = SyntheticZeroSet::empty();
        let s = c(1.3, 2.0);
        assert_eq!(blaschke_b(s, &e).unwrap(), c(1.0, 0.0));
        assert_eq!(c_product(s, &e).unwrap(), c(1.0, 0.0));
        assert_eq!(f12_sum(3.0, &e).unwrap(), 0.0);
        assert_eq!(f22_sum(3.0, &e).unwrap(), 0.0);
        assert_eq!(theorem34_zero_sum(3.0, c(0.0, 0.0), &e).unwrap(), c(0.0, 0.0));
        assert_eq!(n3_and_nb(5.0, &e, &QuadratureSpec::default()).unwrap(), (0.0, 0));
    }

    #[test]
    fn b_at_one_and_on_line() {
        let rho = c(0.6, 14.0);
        let b1 = blaschke_b(c(1.0, 0.0), &zs()).unwrap();
        let closed = ((1.0 - rho).norm() / rho.norm()).powi(2);
        assert!((b1.re - closed).abs() < 1e-12 && b1.im.abs() < 1e-12);
        assert!((blaschke_b(c(0.5, 3.0), &zs()).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn c_log_derivative_closed_form() {
        let rho = c(0.6, 14.0);
        let sum = c_log_derivative(c(1.0, 0.0), &zs());
        let closed = c_pair_log_derivative_at_one(rho);
        assert!((sum.re - closed).abs() < 1e-10 && sum.im.abs() < 1e-12);
        assert!(closed < 0.0);
    }

    #[test]
    fn f_rho_pair_values() {
        assert!(f_rho_pair(c(0.6, 14.0)).unwrap() > 0.0);
        assert!(f_rho_pair(c(0.500_000_1, 14.0)).unwrap().abs() <= 1e-10);
        assert!(f_rho_pair(c(0.6, 0.5)).is_err());
        // integral form over x ∈ (½, σ)
        let (sigma, tau) = (0.8f64, 5.0f64);
        let t2 = tau * tau;
        let g = |x: f64| {
            2.0 * (x * x * (1.0 - x).powi(2) + t2 * (t2 - 6.0 * x * x + 6.0 * x - 1.0))
                / ((x * x + t2).powi(2) * ((1.0 - x).powi(2) + t2).powi(2))
        };
        let (v, _) = gauss_kronrod(&g, 0.5, sigma);
        assert!((f_rho_pair(c(sigma, tau)).unwrap() - v).abs() < 1e-9);
    }

    #[test]
    fn zero_sum_terms() {
        let rho = c(0.6, 14.0);
        let (x, r) = (10.0, c(0.0, 0.0));
        let mut direct = c(0.0, 0.0);
        for z in [rho, rho.conj()] {
            direct += theta_big(x, z - r).unwrap() - theta_big(x, 1.0 - z.conj() - r).unwrap();
        }
        let v = theorem34_zero_sum(x, r, &zs()).unwrap();
        assert!((v - direct).norm() < 1e-14);
        assert!(v.im.abs() < 1e-10);
    }

    #[test]
    fn f12_f22_near_one() {
        let x = 1.0 + 1e-8;
        assert!(f12_sum(x, &zs()).unwrap().abs() < 1e-6);
        // f22 → 2Ω = −2 log B(1)
        let omega = -blaschke_b(c(1.0, 0.0), &zs()).unwrap().re.ln();
        assert!((f22_sum(x, &zs()).unwrap() - 2.0 * omega).abs() < 1e-6);
    }

    #[test]
    fn n3_matches_closed_form() {
        let spec = QuadratureSpec { abs_tol: 1e-12, ..QuadratureSpec::default() };
        for t in [5.0, 13.9, 14.1, 20.0] {
            let (n3, nb) = n3_and_nb(t, &zs(), &spec).unwrap();
            assert!((n3 - n3_closed_form(t, &zs())).abs() < 1e-10);
            assert_eq!(nb, if t > 14.0 { 2 } else { 0 });
        }
        assert!(n3_and_nb(14.0, &zs(), &spec).is_err());
    }

    #[test]
    fn relocation_basics() {
        let table = ZeroTable::from_ordinates(vec![14.134_725_141_734_695, 21.022_039_638_771_556, 25.010_857_580_145_69], 26.0);
        let rel = ZeroRelocation::new(&zs(), &table).unwrap();
        assert_eq!(rel.removed().len(), 2);
        assert!(rel.log_g(c(1.0, 0.0)).norm() < 1e-12);
        // log|G| on the line = log|Q| − log c
        let u = 7.3;
        let s = c(0.5, u);
        assert!((rel.log_g(s).re - (rel.log_abs_q(u) - rel.log_c())).abs() < 1e-12);
        assert!(rel.log_abs_q(1e4).abs() < 1e-5);
        assert_eq!(rel.count_change(14.5), 1.0);
        assert_eq!(rel.count_change(13.0), 0.0);
        assert_eq!(rel.count_change(30.0), 0.0);
    }
}
