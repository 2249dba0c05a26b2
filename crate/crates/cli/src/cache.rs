//! Row-block cache. Each cache entry is exactly one JSON export block for a
//! single row, keyed by (label, method, n, k-range, crate version), so cache
//! files are human-inspectable and the cache codepath is the export codepath.
//! Corrupt or mismatched entries are discarded with a warning and recomputed.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use crate::output::TableBlock;

/// Cache directory resolution: $DESCENTS_CACHE_DIR, then
/// $XDG_CACHE_HOME/descents, then $HOME/.cache/descents, then
/// ./.descents-cache.
pub fn cache_dir() -> PathBuf {
    if let Some(dir) = env::var_os("DESCENTS_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    if let Some(dir) = env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("descents");
    }
    if let Some(home) = env::var_os("HOME") {
        return PathBuf::from(home).join(".cache").join("descents");
    }
    PathBuf::from(".descents-cache")
}

pub fn row_path(dir: &Path, label: &str, method: &str, n: usize, k_max: usize) -> PathBuf {
    dir.join(format!(
        "{label}-{method}-n{n}-k0-{k_max}-v{}.json",
        env!("CARGO_PKG_VERSION")
    ))
}

/// Loads a cached row block if present and intact. Any mismatch (wrong key
/// fields, wrong value count, non-decimal values, unparsable JSON) counts as
/// corruption: a warning goes to stderr and None is returned.
pub fn load_row(
    path: &Path,
    label: &str,
    method: &str,
    n: usize,
    k_max: usize,
) -> Option<Vec<String>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(_) => return None, // no entry
    };
    let intact = serde_json::from_str::<TableBlock>(&text)
        .ok()
        .filter(|block| block.label == label && block.method == method)
        .and_then(|block| {
            if block.rows.len() != 1 {
                return None;
            }
            let row = block.rows.into_iter().next().unwrap();
            if row.n != n || row.values.len() != k_max + 1 {
                return None;
            }
            if row
                .values
                .iter()
                .any(|v| v.is_empty() || !v.bytes().all(|b| b.is_ascii_digit()))
            {
                return None;
            }
            Some(row.values)
        });
    if intact.is_none() {
        eprintln!(
            "warning: discarding corrupt cache entry {}; recomputing",
            path.display()
        );
    }
    intact
}

/// Best-effort store: an unwritable cache degrades to recomputation with a
/// warning, never to failure.
pub fn store_row(path: &Path, block: &TableBlock) {
    if let Some(parent) = path.parent() {
        if let Err(e) = fs::create_dir_all(parent) {
            eprintln!("warning: cannot create cache dir {}: {e}", parent.display());
            return;
        }
    }
    let text = crate::output::to_json(block);
    if let Err(e) = fs::write(path, text) {
        eprintln!("warning: cannot write cache entry {}: {e}", path.display());
    }
}
