//! On-disk cache of cycle-index tables.
//!
//! One JSON file per dimension holds the table together with a schema
//! version and the SHA-256 of its canonical serialization. Entries that fail
//! to parse, carry another version, or do not match their checksum are
//! recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use acute_cube::hyperoct::{cycle_index_capped, CycleIndexTable};
use anyhow::Result;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub n: usize,
    pub payload: serde_json::Value,
    pub checksum: String,
}

impl CacheEntry {
    pub fn new(table: &CycleIndexTable) -> Self {
        let payload = table.to_json();
        CacheEntry {
            schema_version: SCHEMA_VERSION,
            n: table.n,
            checksum: checksum(&payload),
            payload,
        }
    }

    /// The stored table, if the entry is intact and describes dimension `n`.
    pub fn table(&self, n: usize) -> Option<CycleIndexTable> {
        if self.schema_version != SCHEMA_VERSION || self.n != n || self.checksum != checksum(&self.payload) {
            return None;
        }
        CycleIndexTable::from_json(&self.payload).ok().filter(|t| t.n == n)
    }
}

pub fn checksum(payload: &serde_json::Value) -> String {
    format!("{:x}", Sha256::digest(payload.to_string().as_bytes()))
}

/// `$ACUTE_CUBE_CACHE` is handled by the argument parser; this is the
/// fallback under the platform cache directory.
pub fn default_dir() -> Option<PathBuf> {
    dirs::cache_dir().map(|d| d.join("acute-cube"))
}

pub fn entry_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("cycle-index-{n}.json"))
}

fn load(dir: &Path, n: usize) -> Option<CycleIndexTable> {
    let text = fs::read_to_string(entry_path(dir, n)).ok()?;
    serde_json::from_str::<CacheEntry>(&text).ok()?.table(n)
}

fn store(dir: &Path, table: &CycleIndexTable) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = entry_path(dir, table.n);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&CacheEntry::new(table))?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// The cycle index of `I^n`, read from `dir` when a valid entry exists and
/// written back otherwise. Failing to write the cache is not an error.
pub fn cycle_index(dir: Option<&Path>, n: usize, cap: usize) -> Result<CycleIndexTable> {
    if let Some(t) = dir.and_then(|d| load(d, n)) {
        return Ok(t);
    }
    let table = cycle_index_capped(n, cap)?;
    if let Some(d) = dir {
        if let Err(e) = store(d, &table) {
            eprintln!("warning: could not write cache in {}: {e}", d.display());
        }
    }
    Ok(table)
}
