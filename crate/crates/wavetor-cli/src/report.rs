//! Output plumbing: run manifests, CSV tables, identity report printing.
//!
//! CSV floats are written with Rust's default `Display`, which is the
//! shortest round-trip representation; together with fixed iteration
//! orders everywhere in the library this makes outputs byte-identical
//! across runs with the same seed.

use anyhow::{Context, Result};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use wavetor::suite::IdentityReport;

pub struct RunDir {
    root: PathBuf,
}

impl RunDir {
    pub fn create(root: &Path) -> Result<Self> {
        std::fs::create_dir_all(root)
            .with_context(|| format!("creating output directory {}", root.display()))?;
        Ok(RunDir {
            root: root.to_path_buf(),
        })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    /// Every run echoes its fully resolved configuration next to its data.
    pub fn write_manifest(&self, manifest: &serde_json::Value) -> Result<()> {
        self.write_json("manifest.json", manifest)
    }

    pub fn write_json(&self, name: &str, value: &serde_json::Value) -> Result<()> {
        let path = self.path(name);
        let text = serde_json::to_string_pretty(value).context("serializing json")?;
        std::fs::write(&path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))
    }

    pub fn write_csv<R: CsvRow>(&self, name: &str, rows: &[R]) -> Result<()> {
        let path = self.path(name);
        let mut out = String::new();
        out.push_str(R::HEADER);
        out.push('\n');
        for row in rows {
            row.write_fields(&mut out);
            out.push('\n');
        }
        std::fs::write(&path, out).with_context(|| format!("writing {}", path.display()))
    }
}

/// One line of a CSV file. Implementations format every float with `{}`.
pub trait CsvRow {
    const HEADER: &'static str;
    fn write_fields(&self, out: &mut String);
}

impl CsvRow for wavetor::sim::EnergyRow {
    const HEADER: &'static str = "t,E2,E1,E2p,E3p,H,A,eps_inf,Z";
    fn write_fields(&self, out: &mut String) {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            self.t,
            self.e2,
            self.e1,
            self.e2p,
            self.e3p,
            self.hamiltonian,
            self.a_norm,
            self.eps_inf,
            self.z
        );
    }
}

impl CsvRow for wavetor::dispersive::KernelRow {
    const HEADER: &'static str = "k,R,t,max_kernel,ratio";
    fn write_fields(&self, out: &mut String) {
        let _ = write!(
            out,
            "{},{},{},{},{}",
            self.k, self.radius, self.t, self.max_kernel, self.ratio
        );
    }
}

impl CsvRow for wavetor::dispersive::QuotientRow {
    const HEADER: &'static str = "k,R,samples,quotient";
    fn write_fields(&self, out: &mut String) {
        let _ = write!(
            out,
            "{},{},{},{}",
            self.k, self.radius, self.samples, self.quotient
        );
    }
}

impl CsvRow for IdentityReport {
    const HEADER: &'static str = "identity,points,max_rel_err,tol,status";
    fn write_fields(&self, out: &mut String) {
        let _ = write!(
            out,
            "{},{},{},{},{}",
            self.name,
            self.points,
            self.max_rel_err,
            self.tol,
            if self.passed() { "pass" } else { "FAIL" }
        );
    }
}

/// Amplitude-scan CSV row, one per amplitude.
pub struct ScanRow {
    pub eps: f64,
    pub inc_raw: f64,
    pub inc_first: f64,
    pub inc_full: f64,
}

impl CsvRow for ScanRow {
    const HEADER: &'static str = "eps,inc_raw,inc_first,inc_full";
    fn write_fields(&self, out: &mut String) {
        let _ = write!(
            out,
            "{},{},{},{}",
            self.eps, self.inc_raw, self.inc_first, self.inc_full
        );
    }
}

/// Print a suite of identity reports as an aligned table; true iff all pass.
pub fn print_reports(reports: &[IdentityReport]) -> bool {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(8);
    let mut ok = true;
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!(
            "  {:width$}  points {:>7}  max rel err {:>9.3e}  (tol {:.0e})  {}",
            r.name, r.points, r.max_rel_err, r.tol, status
        );
        ok &= r.passed();
    }
    ok
}
