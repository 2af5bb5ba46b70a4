//! Plain-text `key = value` configuration files.
//!
//! Every subcommand reads the same format: one assignment per line, `#`
//! starts a comment, blank lines ignored. Command-line flags override file
//! values. A key the invoked subcommand does not understand is an error,
//! so a typo in a sweep script fails loudly instead of silently running
//! defaults.

use anyhow::{bail, Context, Result};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::path::Path;
use std::str::FromStr;

pub struct FileConfig {
    values: BTreeMap<String, String>,
    consumed: BTreeSet<String>,
}

impl FileConfig {
    /// Empty configuration; every lookup falls through to the default.
    pub fn empty() -> Self {
        FileConfig {
            values: BTreeMap::new(),
            consumed: BTreeSet::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!(
                    "{}:{}: expected `key = value`, got {:?}",
                    path.display(),
                    lineno + 1,
                    raw
                );
            };
            let key = key.trim().to_string();
            if values.insert(key.clone(), value.trim().to_string()).is_some() {
                bail!("{}:{}: duplicate key {:?}", path.display(), lineno + 1, key);
            }
        }
        Ok(FileConfig {
            values,
            consumed: BTreeSet::new(),
        })
    }

    /// Resolve one knob: the flag wins, then the file, then the default.
    pub fn resolve<T: FromStr + Clone>(&mut self, key: &str, flag: Option<T>, default: T) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        self.consumed.insert(key.to_string());
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.values.get(key) {
            Some(raw) => raw
                .parse()
                .map_err(|e| anyhow::anyhow!("config key {key} = {raw:?}: {e}")),
            None => Ok(default),
        }
    }

    /// Fail on any key the subcommand never asked about.
    pub fn finish(&self) -> Result<()> {
        let unknown: Vec<&String> = self
            .values
            .keys()
            .filter(|k| !self.consumed.contains(*k))
            .collect();
        if !unknown.is_empty() {
            bail!(
                "unknown config key(s): {}",
                unknown
                    .iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        Ok(())
    }
}

/// Comma-separated list of floats, e.g. `0.02,0.01,0.005`.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .with_context(|| format!("bad float {p:?}"))
        })
        .collect()
}

/// Dyadic index specification: either a range `0..6` (inclusive) or a
/// comma-separated list `0,3,6`.
pub fn parse_k_spec(s: &str) -> Result<Vec<i32>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i32 = lo.trim().parse().with_context(|| format!("bad range {s:?}"))?;
        let hi: i32 = hi.trim().parse().with_context(|| format!("bad range {s:?}"))?;
        if hi < lo {
            bail!("empty range {s:?}");
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i32>()
                .with_context(|| format!("bad index {p:?}"))
        })
        .collect()
}

/// `lo,hi` pair of lattice modes.
pub fn parse_band(s: &str) -> Result<(i64, i64)> {
    let Some((lo, hi)) = s.split_once(',') else {
        bail!("expected `lo,hi`, got {s:?}");
    };
    let lo = lo.trim().parse().with_context(|| format!("bad band {s:?}"))?;
    let hi = hi.trim().parse().with_context(|| format!("bad band {s:?}"))?;
    if lo > hi {
        bail!("band lower mode exceeds upper mode in {s:?}");
    }
    Ok((lo, hi))
}
