//! Versioned on-disk cache of dimension tables, one JSON file per
//! `(engine version, m, n, D, k_max)`.

use std::fs;
use std::path::{Path, PathBuf};

use lcs_core::algebra::MultiDegree;
use lcs_core::lcs::{DimensionTable, SeriesName};
use serde::{Deserialize, Serialize};

use crate::WorkbenchError;

pub const CACHE_ENV: &str = "LCS_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub version: String,
    pub m: usize,
    pub n: usize,
    pub max_degree: usize,
    pub k_max: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    key: CacheKey,
    entries: Vec<(SeriesName, MultiDegree, usize)>,
}

impl CacheKey {
    fn path(&self, dir: &Path) -> PathBuf {
        dir.join(format!("v{}", self.version)).join(format!(
            "dims-m{}-n{}-D{}-k{}.json",
            self.m, self.n, self.max_degree, self.k_max
        ))
    }
}

/// `--cache-dir`, else `$LCS_CACHE_DIR`, else no cache.
pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

pub fn load(dir: &Path, key: &CacheKey) -> Result<Option<DimensionTable>, WorkbenchError> {
    let path = key.path(dir);
    if !path.exists() {
        return Ok(None);
    }
    let file: CacheFile = serde_json::from_slice(&fs::read(&path)?)
        .map_err(|e| WorkbenchError::Cache(format!("{}: {e}", path.display())))?;
    if &file.key != key {
        return Err(WorkbenchError::Cache(format!(
            "{}: key mismatch",
            path.display()
        )));
    }
    let mut table = DimensionTable::default();
    for (s, d, v) in file.entries {
        table.insert(s, d, v);
    }
    Ok(Some(table))
}

pub fn store(dir: &Path, key: &CacheKey, table: &DimensionTable) -> Result<(), WorkbenchError> {
    let path = key.path(dir);
    fs::create_dir_all(path.parent().expect("cache path has a parent"))?;
    let file = CacheFile {
        key: key.clone(),
        entries: table.iter().map(|(s, d, v)| (*s, d.clone(), v)).collect(),
    };
    // write-then-rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec(&file).expect("cache serializes"))?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_versioned() {
        let key = CacheKey {
            version: "1.2.3".into(),
            m: 2,
            n: 1,
            max_degree: 6,
            k_max: 3,
        };
        assert_eq!(
            key.path(Path::new("/c")),
            PathBuf::from("/c/v1.2.3/dims-m2-n1-D6-k3.json")
        );
    }

    #[test]
    fn missing_file_is_a_miss() {
        let dir = std::env::temp_dir().join("lcs-cache-miss-test-nonexistent");
        let key = CacheKey {
            version: "0".into(),
            m: 1,
            n: 0,
            max_degree: 1,
            k_max: 1,
        };
        assert!(load(&dir, &key).unwrap().is_none());
    }
}
