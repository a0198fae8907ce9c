//! File-backed result cache.
//!
//! Entries are keyed by the canonical JSON of `{schema_version, verb, args}`
//! hashed to a filename. Exact arithmetic makes recomputation deterministic,
//! so a hit must be byte-identical to a fresh run; entries are invalidated
//! only by a schema or engine version bump. Writes go through a temp file
//! and an atomic rename.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u64 = 1;

pub fn engine_version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}

fn canonical_key(verb: &str, args: &Value) -> String {
    // serde_json maps are sorted by key, so this serialization is canonical.
    json!({
        "schema_version": SCHEMA_VERSION,
        "verb": verb,
        "args": args,
    })
    .to_string()
}

fn entry_path(dir: &Path, verb: &str, args: &Value) -> PathBuf {
    let mut hasher = Sha256::new();
    hasher.update(canonical_key(verb, args).as_bytes());
    let digest = hasher.finalize();
    let mut name = String::with_capacity(78);
    name.push_str(verb);
    name.push('-');
    for byte in &digest[..16] {
        name.push_str(&format!("{byte:02x}"));
    }
    name.push_str(".json");
    dir.join(name)
}

/// Looks up a cached `(result, text)` for the request, validating the stored
/// verb, args, and versions.
pub fn lookup(dir: &Path, verb: &str, args: &Value) -> Option<(Value, String)> {
    let path = entry_path(dir, verb, args);
    let bytes = fs::read(&path).ok()?;
    let entry: Value = serde_json::from_slice(&bytes).ok()?;
    let valid = entry["schema_version"] == json!(SCHEMA_VERSION)
        && entry["engine_version"] == json!(engine_version())
        && entry["verb"] == json!(verb)
        && entry["args"] == *args;
    if !valid {
        return None;
    }
    let text = entry["text"].as_str()?.to_string();
    Some((entry["result"].clone(), text))
}

/// Stores a result; idempotent, atomic via temp-file rename.
pub fn store(dir: &Path, verb: &str, args: &Value, result: &Value, text: &str) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = json!({
        "schema_version": SCHEMA_VERSION,
        "engine_version": engine_version(),
        "verb": verb,
        "args": args,
        "result": result,
        "text": text,
    });
    let path = entry_path(dir, verb, args);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_miss_on_changed_args() {
        let dir = std::env::temp_dir().join(format!("theta-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let args = json!({"system": "F4", "highest_weight": "1,0,0,0"});
        let result = json!({"dim": 26});
        assert!(lookup(&dir, "dim", &args).is_none());
        store(&dir, "dim", &args, &result, "dim = 26").unwrap();
        let (got, text) = lookup(&dir, "dim", &args).unwrap();
        assert_eq!(got, result);
        assert_eq!(text, "dim = 26");
        let other = json!({"system": "F4", "highest_weight": "2,0,0,0"});
        assert!(lookup(&dir, "dim", &other).is_none());
        let _ = fs::remove_dir_all(&dir);
    }
}
