//! Persistent cache for computed subspaces: one JSON record per
//! (object, degree) pair, content-addressed with a SHA-256 digest and
//! written atomically (write-temp-then-rename). Records are immutable once
//! written; corrupt or mismatched records act as misses and are rewritten.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const SCHEMA: &str = "dsl-cache-v1";

/// The cached value: a subspace in the coordinates of its graded slice, with
/// every entry an exact `p/q` string.
#[derive(Clone, Serialize, Deserialize)]
pub struct SubspacePayload {
    pub alphabet: Vec<String>,
    pub coordinates: String,
    pub ambient_dim: usize,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    schema: String,
    object: String,
    degree: usize,
    content_hash: String,
    payload: SubspacePayload,
}

/// Cache directory resolution: the `--cache-dir` flag, then `$DSL_CACHE`,
/// then the platform cache (`$XDG_CACHE_HOME/dsl` or `$HOME/.cache/dsl`),
/// then a directory-local fallback.
pub fn resolve_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Ok(dir) = std::env::var("DSL_CACHE") {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    if let Ok(dir) = std::env::var("XDG_CACHE_HOME") {
        if !dir.is_empty() {
            return PathBuf::from(dir).join("dsl");
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return PathBuf::from(home).join(".cache").join("dsl");
        }
    }
    PathBuf::from(".dsl-cache")
}

fn record_path(dir: &Path, object: &str, degree: usize) -> PathBuf {
    dir.join(format!("{object}-{degree}.json"))
}

fn payload_hash(payload: &SubspacePayload) -> String {
    let bytes = serde_json::to_vec(payload).expect("payload serializes");
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    format!("{:x}", hasher.finalize())
}

/// Returns the stored payload, or `None` on a miss: absent file, foreign
/// schema, key mismatch, or a digest that no longer matches the payload.
pub fn load(dir: &Path, object: &str, degree: usize) -> Option<SubspacePayload> {
    let text = fs::read_to_string(record_path(dir, object, degree)).ok()?;
    let record: CacheRecord = serde_json::from_str(&text).ok()?;
    if record.schema != SCHEMA || record.object != object || record.degree != degree {
        return None;
    }
    if record.content_hash != payload_hash(&record.payload) {
        return None;
    }
    Some(record.payload)
}

pub fn store(
    dir: &Path,
    object: &str,
    degree: usize,
    payload: &SubspacePayload,
) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let record = CacheRecord {
        schema: SCHEMA.into(),
        object: object.into(),
        degree,
        content_hash: payload_hash(payload),
        payload: payload.clone(),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(tmp.as_file_mut(), &record).map_err(io::Error::other)?;
    tmp.as_file_mut().write_all(b"\n")?;
    tmp.persist(record_path(dir, object, degree)).map_err(|e| e.error)?;
    Ok(())
}
