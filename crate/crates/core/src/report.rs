//! Verification records: one per identity checked, with both sides, the
//! tolerance, the truncation tail and the verdict.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::Result;

fn ser_complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &z.re)?;
    st.serialize_field("im", &z.im)?;
    st.end()
}

/// Real numbers print as plain floats; complex ones as `a+bi`.
pub fn format_value(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.15e}", z.re)
    } else {
        format!("{:.15e}{:+.15e}i", z.re, z.im)
    }
}

/// Compact form for check ids: `2`, `1.5+3i`.
pub fn format_short(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub check_id: String,
    #[serde(serialize_with = "ser_complex")]
    pub lhs: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub rhs: Complex64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub tail: f64,
    pub pass: bool,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRecord {
    /// pass = |lhs − rhs| ≤ tolerance + tail (and all inputs finite).
    pub fn new(id: impl Into<String>, lhs: Complex64, rhs: Complex64, tolerance: f64, tail: f64) -> Self {
        let abs_diff = (lhs - rhs).norm();
        let pass = abs_diff.is_finite() && tail.is_finite() && abs_diff <= tolerance + tail;
        VerificationRecord {
            check_id: id.into(),
            lhs,
            rhs,
            abs_diff,
            tolerance,
            tail,
            pass,
            seconds: 0.0,
            note: None,
        }
    }

    pub fn real(id: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64, tail: f64) -> Self {
        Self::new(id, Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0), tolerance, tail)
    }

    /// A one-sided check: passes iff `value ≤ bound + tail`. The stored
    /// difference is the excess over the bound (0 when inside).
    pub fn at_most(id: impl Into<String>, value: f64, bound: f64, tail: f64) -> Self {
        let excess = (value - bound).max(0.0);
        let mut r = Self::real(id, value, bound, 0.0, tail);
        r.abs_diff = excess;
        r.pass = value.is_finite() && excess <= tail;
        r
    }

    /// Records a failure that prevented evaluation.
    pub fn failed(id: impl Into<String>, reason: impl fmt::Display) -> Self {
        let nan = Complex64::new(f64::NAN, 0.0);
        let mut r = Self::new(id, nan, nan, 0.0, 0.0);
        r.pass = false;
        r.note = Some(reason.to_string());
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.seconds = start.elapsed().as_secs_f64();
        self
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} lhs={} rhs={} diff={:.3e} tol={:.1e} tail={:.3e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check_id,
            format_value(self.lhs),
            format_value(self.rhs),
            self.abs_diff,
            self.tolerance,
            self.tail
        )?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<VerificationRecord>,
}

impl VerificationReport {
    pub fn push(&mut self, r: VerificationRecord) {
        self.entries.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = VerificationRecord>) {
        self.entries.extend(rs);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|r| r.pass)
    }

    /// `report.csv` with columns check_id,lhs,rhs,abs_diff,tolerance,tail,pass,seconds.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["check_id", "lhs", "rhs", "abs_diff", "tolerance", "tail", "pass", "seconds"])?;
        for r in &self.entries {
            w.write_record([
                r.check_id.clone(),
                format_value(r.lhs),
                format_value(r.rhs),
                format!("{:.6e}", r.abs_diff),
                format!("{:.3e}", r.tolerance),
                format!("{:.6e}", r.tail),
                r.pass.to_string(),
                format!("{:.3}", r.seconds),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// One JSON file per record, named after the check id.
    pub fn write_json(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for r in &self.entries {
            let name: String =
                r.check_id.chars().map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '_' { c } else { '_' }).collect();
            let file = std::fs::File::create(dir.join(format!("{name}.json")))?;
            serde_json::to_writer_pretty(file, r)?;
        }
        Ok(())
    }
}
