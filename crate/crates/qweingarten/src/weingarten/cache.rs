//! Persistent cache for Weingarten tables.
//!
//! One self-describing JSON file per spec, named
//! `{case}_{k-or-word}_{n}.wgt.json`. Entries are exact `num/den` strings
//! (floats would destroy exactness and portability), the basis is stored as
//! 1-based partner arrays in canonical order, and the record carries a
//! mandatory format version plus a SHA-256 checksum of its body. A corrupt
//! or version-mismatched file is reported and recomputed, never silently
//! trusted. Writes go to a temporary sibling and are renamed into place.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::{GramCase, GramSpec, WeingartenError, WeingartenTable};
use crate::diagrams::{ColorWord, Pairing};
use crate::exactalg::{rational_from_string, rational_to_string, RationalMatrix};

/// Bumped whenever the record layout changes; readers reject other versions.
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Environment variable consulted by the CLI for the cache directory.
pub const CACHE_ENV_VAR: &str = "QWEINGARTEN_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cache file {path} is not valid JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("cache file {path} has format version {found}, expected {expected}")]
    VersionMismatch {
        path: PathBuf,
        found: u32,
        expected: u32,
    },
    #[error("cache file {path} failed its checksum")]
    ChecksumMismatch { path: PathBuf },
    #[error("cache file {path} describes a different spec")]
    SpecMismatch { path: PathBuf },
    #[error("cache file {path} holds an invalid entry: {detail}")]
    InvalidEntry { path: PathBuf, detail: String },
}

impl Clone for CacheError {
    fn clone(&self) -> Self {
        // io/serde errors are not Clone; keep the path and a stringified
        // source so statuses can be passed around freely.
        match self {
            CacheError::Io { path, source } => CacheError::Io {
                path: path.clone(),
                source: std::io::Error::new(source.kind(), source.to_string()),
            },
            CacheError::Json { path, source } => CacheError::InvalidEntry {
                path: path.clone(),
                detail: source.to_string(),
            },
            CacheError::VersionMismatch {
                path,
                found,
                expected,
            } => CacheError::VersionMismatch {
                path: path.clone(),
                found: *found,
                expected: *expected,
            },
            CacheError::ChecksumMismatch { path } => CacheError::ChecksumMismatch {
                path: path.clone(),
            },
            CacheError::SpecMismatch { path } => CacheError::SpecMismatch { path: path.clone() },
            CacheError::InvalidEntry { path, detail } => CacheError::InvalidEntry {
                path: path.clone(),
                detail: detail.clone(),
            },
        }
    }
}

impl PartialEq for CacheError {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

impl Eq for CacheError {}

/// How a cached lookup went; `Rejected` carries the reason the file on disk
/// could not be trusted (the table was recomputed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
    Rejected(CacheError),
}

impl fmt::Display for CacheStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheStatus::Hit => write!(f, "hit"),
            CacheStatus::Miss => write!(f, "miss"),
            CacheStatus::Disabled => write!(f, "disabled"),
            CacheStatus::Rejected(err) => write!(f, "rejected ({err})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    format_version: u32,
    checksum: String,
    body: CacheBody,
}

#[derive(Serialize, Deserialize)]
struct CacheBody {
    case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    half_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    n: u64,
    basis: Vec<Vec<usize>>,
    gram: Vec<Vec<String>>,
    weingarten: Vec<Vec<String>>,
}

fn body_checksum(body: &CacheBody) -> String {
    let bytes = serde_json::to_vec(body).expect("cache body serializes");
    let digest = Sha256::digest(&bytes);
    let mut hex = String::with_capacity(64);
    for b in digest {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

fn matrix_to_rows(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| rational_to_string(m.get(r, c))).collect())
        .collect()
}

fn rows_to_matrix(
    rows: &[Vec<String>],
    basis: &Arc<Vec<Pairing>>,
    path: &Path,
) -> Result<RationalMatrix, CacheError> {
    let dim = basis.len();
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CacheError::InvalidEntry {
            path: path.to_path_buf(),
            detail: format!("matrix is not {dim}x{dim}"),
        });
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in rows {
        for cell in row {
            entries.push(rational_from_string(cell).map_err(|e| CacheError::InvalidEntry {
                path: path.to_path_buf(),
                detail: e.to_string(),
            })?);
        }
    }
    Ok(RationalMatrix::new(dim, dim, entries).with_basis(Arc::clone(basis)))
}

fn record_for(table: &WeingartenTable) -> CacheRecord {
    let (half_size, word) = match table.spec().case() {
        GramCase::Orthogonal { half_size } => (Some(*half_size), None),
        GramCase::Unitary { word } => (None, Some(word.to_string())),
    };
    let body = CacheBody {
        case: table.spec().case().label().to_string(),
        half_size,
        word,
        n: table.spec().n(),
        basis: table.basis().iter().map(|p| p.partner_one_based()).collect(),
        gram: matrix_to_rows(table.gram()),
        weingarten: matrix_to_rows(table.weingarten()),
    };
    CacheRecord {
        format_version: CACHE_FORMAT_VERSION,
        checksum: body_checksum(&body),
        body,
    }
}

/// Write `table` into `dir` under its canonical file name. The write is
/// atomic: a temporary sibling file is renamed over the target.
pub fn store(dir: &Path, table: &WeingartenTable) -> Result<PathBuf, CacheError> {
    let io_err = |path: &Path, source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    };
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let target = dir.join(table.spec().cache_file_name());
    let record = record_for(table);
    let json = serde_json::to_string_pretty(&record).expect("cache record serializes");
    let tmp = dir.join(format!(
        "{}.tmp-{}",
        table.spec().cache_file_name(),
        std::process::id()
    ));
    std::fs::write(&tmp, json.as_bytes()).map_err(|e| io_err(&tmp, e))?;
    std::fs::rename(&tmp, &target).map_err(|e| io_err(&target, e))?;
    Ok(target)
}

/// Load the table for `spec` from `dir`. Returns `Ok(None)` when no file
/// exists; a present but unusable file is an error describing why.
pub fn load(dir: &Path, spec: &GramSpec) -> Result<Option<WeingartenTable>, CacheError> {
    let path = dir.join(spec.cache_file_name());
    let raw = match std::fs::read_to_string(&path) {
        Ok(raw) => raw,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => {
            return Err(CacheError::Io {
                path,
                source: e,
            })
        }
    };
    let record: CacheRecord = serde_json::from_str(&raw).map_err(|e| CacheError::Json {
        path: path.clone(),
        source: e,
    })?;
    if record.format_version != CACHE_FORMAT_VERSION {
        return Err(CacheError::VersionMismatch {
            path,
            found: record.format_version,
            expected: CACHE_FORMAT_VERSION,
        });
    }
    if body_checksum(&record.body) != record.checksum {
        return Err(CacheError::ChecksumMismatch { path });
    }
    let body = record.body;

    let recorded_spec = match (body.case.as_str(), body.half_size, &body.word) {
        ("orthogonal", Some(half_size), None) => GramSpec::orthogonal(half_size, body.n),
        ("unitary", None, Some(word)) => {
            let word = ColorWord::parse(word).map_err(|e| CacheError::InvalidEntry {
                path: path.clone(),
                detail: e.to_string(),
            })?;
            GramSpec::unitary(word, body.n)
        }
        _ => {
            return Err(CacheError::InvalidEntry {
                path,
                detail: "unrecognized case".to_string(),
            })
        }
    };
    if &recorded_spec != spec {
        return Err(CacheError::SpecMismatch { path });
    }

    let mut basis = Vec::with_capacity(body.basis.len());
    for partner in &body.basis {
        basis.push(
            Pairing::from_partner_one_based(partner).map_err(|e| CacheError::InvalidEntry {
                path: path.clone(),
                detail: e.to_string(),
            })?,
        );
    }
    let basis = Arc::new(basis);
    let gram = rows_to_matrix(&body.gram, &basis, &path)?;
    let weingarten = rows_to_matrix(&body.weingarten, &basis, &path)?;
    Ok(Some(WeingartenTable {
        spec: spec.clone(),
        basis,
        gram,
        weingarten,
    }))
}

/// Cached build: try `dir` first, recompute on miss or on any rejected
/// record (refreshing the file), and report what happened. `None` disables
/// the cache entirely.
pub fn load_or_build(
    dir: Option<&Path>,
    spec: &GramSpec,
) -> Result<(WeingartenTable, CacheStatus), WeingartenError> {
    let Some(dir) = dir else {
        return Ok((super::build_weingarten(spec)?, CacheStatus::Disabled));
    };
    match load(dir, spec) {
        Ok(Some(table)) => Ok((table, CacheStatus::Hit)),
        Ok(None) => {
            let table = super::build_weingarten(spec)?;
            store(dir, &table)?;
            Ok((table, CacheStatus::Miss))
        }
        Err(err) => {
            let table = super::build_weingarten(spec)?;
            store(dir, &table)?;
            Ok((table, CacheStatus::Rejected(err)))
        }
    }
}
