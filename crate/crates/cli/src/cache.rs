//! On-disk cache of tilting characters that are not in the base table.
//!
//! The file is a JSON array of records. It is append-only: a write adds
//! the records computed in this run that the file does not yet hold.
//! Writers take an exclusive lock on a sidecar file and replace the cache
//! by atomic rename, so concurrent runs never see a torn file.

use std::fs::{self, File, OpenOptions};
use std::io;
use std::path::{Path, PathBuf};

use sl3tensor::characters::{self, TiltingRecord};

/// Overrides the cache location.
pub const CACHE_ENV: &str = "SL3TENSOR_CACHE";

/// `$XDG_CACHE_HOME/sl3tensor/tilting.json`, falling back to
/// `$HOME/.cache/sl3tensor/tilting.json`, then to the working directory.
pub fn default_path() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|s| !s.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")));
    match base {
        Some(b) => b.join("sl3tensor").join("tilting.json"),
        None => PathBuf::from("sl3tensor-tilting.json"),
    }
}

pub fn cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .filter(|s| !s.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(default_path)
}

/// Reads the cache; a missing file is an empty cache.
pub fn load(path: &Path) -> Result<Vec<TiltingRecord>, String> {
    match fs::read_to_string(path) {
        Ok(s) => serde_json::from_str(&s).map_err(|e| format!("{}: {e}", path.display())),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Vec::new()),
        Err(e) => Err(format!("{}: {e}", path.display())),
    }
}

/// Loads the cache and checks every record against fresh computation.
pub fn load_checked(path: &Path) -> Result<Vec<TiltingRecord>, String> {
    let records = load(path)?;
    characters::check_tilting_records(&records).map_err(|e| e.to_string())?;
    Ok(records)
}

/// Appends the records derived so far in this process. A cache that fails
/// to parse is replaced rather than extended, and stale records are
/// dropped.
pub fn store(path: &Path) -> io::Result<usize> {
    let fresh = characters::derived_tilting_records().map_err(io::Error::other)?;
    if fresh.is_empty() {
        return Ok(0);
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let lock_path = sidecar(path, "lock");
    let lock = OpenOptions::new()
        .create(true)
        .truncate(false)
        .write(true)
        .open(&lock_path)?;
    lock.lock()?;
    let mut records = load(path).unwrap_or_default();
    let before = records.len();
    records.retain(|r| characters::check_tilting_records(std::slice::from_ref(r)).is_ok());
    let dropped = before - records.len();
    for r in fresh {
        if !records.iter().any(|x| x.p == r.p && x.weight == r.weight) {
            records.push(r);
        }
    }
    let added = records.len() + dropped - before;
    if added > 0 || dropped > 0 {
        let tmp = sidecar(path, "tmp");
        let body = serde_json::to_string_pretty(&records).map_err(io::Error::other)?;
        fs::write(&tmp, body + "\n")?;
        File::open(&tmp)?.sync_all()?;
        fs::rename(&tmp, path)?;
    }
    lock.unlock()?;
    Ok(added)
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}
