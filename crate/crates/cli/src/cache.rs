use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use plethyra::{Partition, SchurVector, ENGINE_VERSION};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::compute::Method;
use crate::error::CliError;

/// One cached Schur expansion of `s_ν ∘ s_μ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub nu: String,
    pub mu: String,
    pub value: Value,
    pub engine_version: String,
    pub method: Method,
}

impl CacheEntry {
    pub fn new(nu: &Partition, mu: &Partition, value: &SchurVector, method: Method) -> Self {
        CacheEntry {
            nu: nu.to_string(),
            mu: mu.to_string(),
            value: value.to_json(),
            engine_version: ENGINE_VERSION.to_string(),
            method,
        }
    }

    pub fn key(&self) -> Result<(Partition, Partition), CliError> {
        Ok((self.nu.parse()?, self.mu.parse()?))
    }

    pub fn schur(&self) -> Result<SchurVector, CliError> {
        Ok(SchurVector::from_json(&self.value)?)
    }
}

/// A file in the cache directory that could not be read back.
#[derive(Debug, Clone)]
pub struct Listed {
    pub path: PathBuf,
    pub entry: Result<CacheEntry, String>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `nu_<ν>__mu_<μ>-<hash>.json`, with the hash taken over the unsanitised key
    /// so that distinct keys never share a file.
    pub fn file_name(nu: &Partition, mu: &Partition) -> String {
        let key = format!("{nu}|{mu}");
        let digest = Sha256::digest(key.as_bytes());
        let hash: String = digest.iter().take(6).map(|b| format!("{b:02x}")).collect();
        let clean = |p: &Partition| p.to_string().replace(',', "-");
        format!("nu_{}__mu_{}-{hash}.json", clean(nu), clean(mu))
    }

    pub fn path_for(&self, nu: &Partition, mu: &Partition) -> PathBuf {
        self.dir.join(Self::file_name(nu, mu))
    }

    /// The cached expansion, if present and readable. Anything unusable is
    /// reported as a warning and treated as a miss.
    pub fn get(&self, nu: &Partition, mu: &Partition) -> Option<SchurVector> {
        let path = self.path_for(nu, mu);
        if !path.exists() {
            return None;
        }
        let entry = match read_entry(&path) {
            Ok(e) => e,
            Err(why) => {
                log::warn!("ignoring corrupt cache entry {}: {why}", path.display());
                return None;
            }
        };
        if entry.nu != nu.to_string() || entry.mu != mu.to_string() {
            log::warn!("ignoring cache entry {} stored under another key", path.display());
            return None;
        }
        if entry.engine_version != ENGINE_VERSION {
            log::info!("ignoring cache entry {} from engine {}", path.display(), entry.engine_version);
            return None;
        }
        match entry.schur() {
            Ok(v) => Some(v),
            Err(why) => {
                log::warn!("ignoring corrupt cache entry {}: {why}", path.display());
                None
            }
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it into place.
    pub fn put(&self, entry: &CacheEntry) -> Result<PathBuf, CliError> {
        let (nu, mu) = entry.key()?;
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&nu, &mu);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        let text = serde_json::to_string(entry).map_err(|e| CliError::Cache(e.to_string()))?;
        tmp.write_all(text.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.persist(&path).map_err(|e| CliError::Cache(e.to_string()))?;
        Ok(path)
    }

    fn entry_files(&self) -> Result<Vec<PathBuf>, CliError> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut files: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        Ok(files)
    }

    pub fn list(&self) -> Result<Vec<Listed>, CliError> {
        Ok(self
            .entry_files()?
            .into_iter()
            .map(|path| {
                let entry = read_entry(&path);
                Listed { path, entry }
            })
            .collect())
    }

    /// Removes every entry file and returns how many were removed.
    pub fn clear(&self) -> Result<usize, CliError> {
        let files = self.entry_files()?;
        for f in &files {
            fs::remove_file(f)?;
        }
        Ok(files.len())
    }
}

fn read_entry(path: &Path) -> Result<CacheEntry, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sample() -> SchurVector {
        [(p("4"), 1.into()), (p("2,2"), 1.into())].into_iter().collect()
    }

    #[test]
    fn stores_and_reads_back() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        assert_eq!(cache.get(&p("2"), &p("2")), None);
        cache.put(&CacheEntry::new(&p("2"), &p("2"), &sample(), Method::Powersum)).unwrap();
        assert_eq!(cache.get(&p("2"), &p("2")), Some(sample()));
        assert_eq!(cache.list().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert_eq!(cache.get(&p("2"), &p("2")), None);
    }

    #[test]
    fn corrupt_entries_are_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        fs::write(cache.path_for(&p("2"), &p("2")), "{not json").unwrap();
        assert_eq!(cache.get(&p("2"), &p("2")), None);
        assert!(cache.list().unwrap()[0].entry.is_err());
    }

    #[test]
    fn file_names_separate_keys() {
        let a = Cache::file_name(&p("1,1"), &p("2"));
        let b = Cache::file_name(&p("2,1"), &p("2"));
        assert_ne!(a, b);
        assert!(a.starts_with("nu_1-1__mu_2-"));
    }
}
