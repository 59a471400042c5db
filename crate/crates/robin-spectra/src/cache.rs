//! Keyed result cache for the CLI: one JSON file per key hash in a
//! two-level directory fan-out, written atomically (temp file + rename)
//! so concurrent processes never observe a torn entry. Entries carry the
//! crate version; on mismatch they are ignored and rewritten.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: String,
    key: String,
    value: serde_json::Value,
}

/// Canonical cache key: operation name plus sorted `name=value` pairs.
/// Floats are rendered with Rust's shortest round-trip formatting, so the
/// key for a given parameter set is stable across runs.
pub fn canonical_key(op: &str, params: &BTreeMap<String, String>) -> String {
    let mut key = String::from(op);
    for (name, value) in params {
        key.push('|');
        key.push_str(name);
        key.push('=');
        key.push_str(value);
    }
    key
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
    verbose: bool,
}

impl Cache {
    /// A cache rooted at `dir`, or a disabled cache when `dir` is `None`.
    pub fn new(dir: Option<PathBuf>, verbose: bool) -> Self {
        Cache { dir, verbose }
    }

    pub fn disabled() -> Self {
        Cache { dir: None, verbose: false }
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let hash = hex_digest(key);
        Some(dir.join(&hash[..2]).join(&hash[2..4]).join(format!("{hash}.json")))
    }

    /// Cached value for `key`, if present with a matching version.
    pub fn lookup(&self, key: &str) -> Option<serde_json::Value> {
        let path = self.path_for(key)?;
        let bytes = std::fs::read(&path).ok()?;
        let entry: Entry = serde_json::from_slice(&bytes).ok()?;
        if entry.version != ARTIFACT_VERSION || entry.key != key {
            return None; // stale or colliding entry: ignored, later rewritten
        }
        if self.verbose {
            eprintln!("cache hit: {}", path.display());
        }
        Some(entry.value)
    }

    /// Stores `value` under `key`. An unwritable cache directory degrades
    /// to compute-only with a warning on stderr.
    pub fn store(&self, key: &str, value: &serde_json::Value) {
        let Some(path) = self.path_for(key) else { return };
        let entry = Entry {
            version: ARTIFACT_VERSION.to_string(),
            key: key.to_string(),
            value: value.clone(),
        };
        if let Err(err) = write_atomic(&path, &entry) {
            eprintln!("warning: cache write failed ({err}); continuing without cache");
        } else if self.verbose {
            eprintln!("cache store: {}", path.display());
        }
    }
}

fn write_atomic(path: &Path, entry: &Entry) -> std::io::Result<()> {
    let parent = path.parent().expect("cache paths have parents");
    std::fs::create_dir_all(parent)?;
    let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
    tmp.write_all(&serde_json::to_vec_pretty(entry)?)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn hex_digest(key: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(key.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        use std::fmt::Write;
        write!(out, "{byte:02x}").expect("writing to a String cannot fail");
    }
    out
}
