//! On-disk result cache: one JSON file per `(n, k, field, version)` key,
//! named by a hash of the key, plus a `manifest.json` index.
//!
//! Writes go through a temporary file and a rename, so concurrent runs
//! against the same directory never observe partial files.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use vdw_core::classify::CellComputation;
use vdw_core::{FieldSpec, VdwParams, ARTIFACT_VERSION};

const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: usize,
    pub k: usize,
    pub field: FieldSpec,
    pub version: String,
}

impl CacheKey {
    pub fn new(params: VdwParams, field: FieldSpec) -> Self {
        CacheKey {
            n: params.n(),
            k: params.k(),
            field,
            version: ARTIFACT_VERSION.to_string(),
        }
    }

    fn canonical(&self) -> String {
        format!(
            "vdw:n={}:k={}:field={}:version={}",
            self.n, self.k, self.field, self.version
        )
    }

    fn file_name(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        format!("{}.json", &hex::encode(&digest[..])[..32])
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub value: CellComputation,
    /// Seconds since the Unix epoch at write time.
    pub timestamp: u64,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create cache directory {}", dir.display()))?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    /// A cached computation for `key`; unreadable or mismatched files count
    /// as misses.
    pub fn get(&self, key: &CacheKey) -> Option<CellComputation> {
        let text = fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == *key).then_some(entry.value)
    }

    pub fn put(&self, key: &CacheKey, value: &CellComputation) -> Result<()> {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let entry = CacheEntry {
            key: key.clone(),
            value: value.clone(),
            timestamp,
        };
        let file = key.file_name();
        self.write_atomic(&file, &serde_json::to_string_pretty(&entry)?)?;
        self.record_in_manifest(&file, key)
    }

    fn record_in_manifest(&self, file: &str, key: &CacheKey) -> Result<()> {
        let path = self.dir.join(MANIFEST);
        let mut manifest: BTreeMap<String, String> = fs::read_to_string(&path)
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default();
        manifest.insert(file.to_string(), key.canonical());
        self.write_atomic(MANIFEST, &serde_json::to_string_pretty(&manifest)?)
    }

    fn write_atomic(&self, name: &str, contents: &str) -> Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(contents.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.dir.join(name))
            .with_context(|| format!("cannot write {name} in {}", self.dir.display()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vdw_core::classify::classify_cell;
    use vdw_core::HochsterConfig;

    #[test]
    fn round_trip_and_version_isolation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let params = VdwParams::new(6, 2).unwrap();
        let key = CacheKey::new(params, FieldSpec::Rationals);
        assert!(cache.get(&key).is_none());
        let cell = classify_cell(params, FieldSpec::Rationals, &HochsterConfig::default()).unwrap();
        cache.put(&key, &cell).unwrap();
        assert_eq!(cache.get(&key), Some(cell));

        let bumped = CacheKey {
            version: "0.0.0-other".into(),
            ..key.clone()
        };
        assert!(cache.get(&bumped).is_none());
        let gf2 = CacheKey::new(params, FieldSpec::GF2);
        assert_ne!(gf2.file_name(), key.file_name());

        let manifest = fs::read_to_string(dir.path().join(MANIFEST)).unwrap();
        assert!(manifest.contains("vdw:n=6:k=2:field=Q"));
    }

    #[test]
    fn corrupt_files_are_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let key = CacheKey::new(VdwParams::new(5, 2).unwrap(), FieldSpec::Rationals);
        fs::write(dir.path().join(key.file_name()), "{ not json").unwrap();
        assert!(cache.get(&key).is_none());
    }
}
