//! JSON-lines result cache. One record per line; a later line for the same
//! (graph key, kind) replaces an earlier one.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use ehrhart_core::roots::{Root, RootKind, RootSet};
use ehrhart_core::{poly::parse_rational, RationalPolynomial};

use crate::Failure;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    pub re: f64,
    pub im: f64,
    /// `num/den` for exactly known roots.
    pub exact: Option<String>,
    pub multiplicity: usize,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check: String,
    pub status: String,
    pub margin: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub graph_key: String,
    pub kind: String,
    pub graph: String,
    pub method: String,
    pub dim: usize,
    pub gorenstein: bool,
    pub multipartite: bool,
    /// Ehrhart coefficients, constant term first.
    pub ehrhart: Vec<String>,
    pub delta: Vec<String>,
    pub roots: Vec<RootRecord>,
    pub verdicts: Vec<VerdictRecord>,
    pub version: String,
}

impl CacheRecord {
    pub fn polynomial(&self) -> Result<RationalPolynomial, Failure> {
        RationalPolynomial::from_strings(&self.ehrhart).map_err(|e| self.corrupt(e))
    }

    pub fn root_set(&self) -> Result<RootSet, Failure> {
        let roots = self
            .roots
            .iter()
            .map(|r| {
                let exact = r.exact.as_deref().map(parse_rational).transpose().map_err(|e| self.corrupt(e))?;
                let kind = match &exact {
                    Some(q) if q.is_integer() => RootKind::ExactInteger,
                    Some(_) => RootKind::ExactRational,
                    None => RootKind::Numeric,
                };
                Ok(Root {
                    value: Complex64::new(r.re, r.im),
                    exact,
                    kind,
                    multiplicity: r.multiplicity,
                    residual: r.residual,
                })
            })
            .collect::<Result<_, Failure>>()?;
        Ok(RootSet { roots, degree: self.dim })
    }

    fn corrupt(&self, e: impl std::fmt::Display) -> Failure {
        Failure::Compute(format!("cache record {} ({}): {e}", self.graph_key, self.kind))
    }
}

pub struct Cache {
    path: PathBuf,
    records: BTreeMap<(String, String), CacheRecord>,
}

impl Cache {
    /// Reads `path`; a missing file is an empty cache.
    pub fn open(path: &Path) -> Result<Self, Failure> {
        let mut records = BTreeMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                    let rec: CacheRecord = serde_json::from_str(line).map_err(|e| {
                        Failure::Compute(format!("{}:{}: {e}", path.display(), i + 1))
                    })?;
                    records.insert((rec.kind.clone(), rec.graph_key.clone()), rec);
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(Failure::Compute(format!("cannot read {}: {e}", path.display()))),
        }
        Ok(Cache {
            path: path.to_path_buf(),
            records,
        })
    }

    pub fn exists(&self) -> bool {
        self.path.exists()
    }

    pub fn get(&self, kind: &str, key: &str) -> Option<&CacheRecord> {
        self.records.get(&(kind.to_string(), key.to_string()))
    }

    /// Appends `recs` in the given order through a single writer.
    pub fn append(&mut self, recs: Vec<CacheRecord>) -> Result<(), Failure> {
        if recs.is_empty() {
            return Ok(());
        }
        let io = |e: std::io::Error| Failure::Compute(format!("cannot write {}: {e}", self.path.display()));
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(io)?;
        let mut buf = String::new();
        for rec in &recs {
            buf.push_str(&serde_json::to_string(rec).expect("records serialize"));
            buf.push('\n');
        }
        file.write_all(buf.as_bytes()).map_err(io)?;
        for rec in recs {
            self.records.insert((rec.kind.clone(), rec.graph_key.clone()), rec);
        }
        Ok(())
    }
}
