//! Frozen snark certificates.
//!
//! Flower and Blanuša certificates come from [`cover_search`] rather than a
//! closed-form rule, so they are stored as data: one certificate JSON file
//! per graph plus `manifest.json` recording the graph6 string, the seed and
//! the search time. The directory defaults to `fixtures/` in this crate and
//! can be overridden with the `FRANK_FIXTURES` environment variable.
//!
//! [`cover_search`]: crate::solver::cover_search

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::Certificate;
use crate::graph::{generate_family, write_graph6, FamilySpec};
use crate::solver::{cover_search, SearchOptions, SolverError};

pub const FIXTURES_ENV: &str = "FRANK_FIXTURES";
pub const MANIFEST: &str = "manifest.json";

/// The snarks whose 2-certificates are kept as fixtures.
pub const SNARKS: [FamilySpec; 4] = [
    FamilySpec::Flower(5),
    FamilySpec::Flower(7),
    FamilySpec::Blanusa(1),
    FamilySpec::Blanusa(2),
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("no fixture for {0}")]
    Missing(String),
    #[error("fixture {family} does not match the generated graph")]
    GraphMismatch { family: String },
    #[error("search found no certificate for {0}")]
    NotFound(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Family(#[from] crate::graph::FamilyError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub family: String,
    pub graph6: String,
    pub file: String,
    pub seed: u64,
    pub restarts: u64,
    pub search_seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: String,
    pub entries: Vec<FixtureEntry>,
}

impl Manifest {
    pub fn entry(&self, family: &str) -> Option<&FixtureEntry> {
        self.entries.iter().find(|e| e.family == family)
    }
}

pub fn fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

fn read(path: &Path) -> Result<String, FixtureError> {
    fs::read_to_string(path).map_err(|source| FixtureError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), FixtureError> {
    fs::write(path, text).map_err(|source| FixtureError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_manifest(dir: &Path) -> Result<Manifest, FixtureError> {
    let path = dir.join(MANIFEST);
    serde_json::from_str(&read(&path)?).map_err(|source| FixtureError::Json { path, source })
}

/// Loads the certificate stored for `family`, checking that it belongs to
/// the graph the generator produces today.
pub fn load_certificate(dir: &Path, family: &FamilySpec) -> Result<Certificate, FixtureError> {
    let name = family.to_string();
    let manifest = load_manifest(dir)?;
    let entry = manifest
        .entry(&name)
        .ok_or_else(|| FixtureError::Missing(name.clone()))?;
    let path = dir.join(&entry.file);
    let c = Certificate::from_json(&read(&path)?)
        .map_err(|source| FixtureError::Json { path, source })?;
    let expected = write_graph6(&generate_family(family)?);
    if c.graph6 != expected || entry.graph6 != expected {
        return Err(FixtureError::GraphMismatch { family: name });
    }
    Ok(c)
}

/// Runs the 2-certificate search for every snark in [`SNARKS`] and writes
/// the certificates and the manifest into `dir`.
pub fn regenerate(dir: &Path, seed: u64) -> Result<Manifest, FixtureError> {
    fs::create_dir_all(dir).map_err(|source| FixtureError::Io {
        path: dir.to_owned(),
        source,
    })?;
    let mut manifest = Manifest {
        version: env!("CARGO_PKG_VERSION").to_string(),
        entries: Vec::new(),
    };
    for family in &SNARKS {
        let g = generate_family(family)?;
        let out = cover_search(
            &g,
            &SearchOptions {
                k: 2,
                seed,
                ..SearchOptions::default()
            },
        )?;
        let c = out
            .certificate
            .ok_or_else(|| FixtureError::NotFound(family.to_string()))?;
        let file = format!("{}.json", family.to_string().replace(':', "_"));
        write(&dir.join(&file), &c.to_json())?;
        manifest.entries.push(FixtureEntry {
            family: family.to_string(),
            graph6: c.graph6.clone(),
            file,
            seed,
            restarts: out.restarts,
            search_seconds: out.seconds,
        });
    }
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write(&dir.join(MANIFEST), &text)?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn stored_certificates_verify() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        for family in &SNARKS {
            let c = load_certificate(&dir, family).unwrap();
            let g = generate_family(family).unwrap();
            assert_eq!(c.claimed_k, 2);
            assert!(verify_certificate(&g, &c).valid, "{family}");
        }
    }

    #[test]
    fn missing_directory_is_an_io_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            load_certificate(dir.path(), &FamilySpec::Flower(5)),
            Err(FixtureError::Io { .. })
        ));
    }
}
