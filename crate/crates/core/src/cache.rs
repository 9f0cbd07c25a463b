//! On-disk cache of computed tables: one JSON file per (type, rank) under
//! `$SCHUBERT_CACHE_DIR`, ignored when written by another engine version.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::schubert::{SchubertEngine, SchubertTable, ENGINE_VERSION};
use crate::weyl::{CartanType, SignedPermutation};

pub const CACHE_ENV: &str = "SCHUBERT_CACHE_DIR";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

pub fn cache_file(dir: &Path, ty: CartanType, n: u32) -> PathBuf {
    dir.join(format!("{}{n}.json", ty.to_string().to_lowercase()))
}

/// Seeds `engine` from the cache file for rank `n`. Returns whether a usable
/// file was found; stale or foreign files are skipped.
pub fn load(engine: &SchubertEngine, dir: &Path, n: u32) -> Result<bool> {
    let path = cache_file(dir, engine.cartan_type(), n);
    let Ok(bytes) = fs::read(&path) else {
        return Ok(false);
    };
    let table: SchubertTable = match serde_json::from_slice(&bytes) {
        Ok(t) => t,
        Err(_) => return Ok(false),
    };
    if table.version != ENGINE_VERSION || table.cartan_type != engine.cartan_type() {
        return Ok(false);
    }
    engine.load(table)?;
    Ok(true)
}

/// Computes every element of rank `n` and writes the table atomically.
pub fn fill_and_store(engine: &SchubertEngine, dir: &Path, n: u32) -> Result<SchubertTable> {
    for w in SignedPermutation::elements(engine.cartan_type().family(), n) {
        engine.double_schubert(&w)?;
    }
    let table = engine.snapshot().restricted(n);
    store(&table, dir, n)?;
    Ok(table)
}

pub fn store(table: &SchubertTable, dir: &Path, n: u32) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_file(dir, table.cartan_type, n);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(table)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}
