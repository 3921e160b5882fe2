//! Content-addressed cache of generated graphs.
//!
//! Layout: `<dir>/<first two hex digits>/<sha256 hex>.json`, where the digest
//! covers the target, core radius, margin and generator version. The stored
//! file is the exact JSON that `gen` prints, so hits and misses give identical
//! output.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::generate::{generate, GenOptions, Graph, GENERATOR_VERSION};
use super::CliError;

pub const CACHE_ENV: &str = "CUTLATTICE_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

pub fn cache_key(target: &str, radius: usize, margin: Option<usize>) -> String {
    let margin = margin.map_or("default".to_string(), |m| m.to_string());
    let text = format!("{}\n{radius}\n{margin}\n{GENERATOR_VERSION}", target.trim());
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The cache named by `CUTLATTICE_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(&key[..2]).join(format!("{key}.json"))
    }

    /// Returns the graph JSON and whether it came from the cache.
    pub fn load_or_generate(&self, target: &str, opts: GenOptions) -> Result<(String, bool), CliError> {
        let path = self.path_for(&cache_key(target, opts.radius, opts.margin));
        if let Ok(text) = fs::read_to_string(&path) {
            if Graph::from_json(&text).is_ok() {
                return Ok((text, true));
            }
        }
        let text = generate(target, opts)?.to_json();
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
        fs::create_dir_all(path.parent().expect("key path has a parent")).map_err(io)?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, &text).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok((text, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_equals_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let opts = GenOptions { radius: 2, margin: Some(3), vertex_cap: 10_000 };
        let (a, hit_a) = cache.load_or_generate("{7,3}", opts).unwrap();
        let (b, hit_b) = cache.load_or_generate("{7,3}", opts).unwrap();
        assert!(!hit_a && hit_b);
        assert_eq!(a, b);
        assert_eq!(a, generate("{7,3}", opts).unwrap().to_json());
        assert!(cache.path_for(&cache_key("{7,3}", 2, Some(3))).exists());
    }

    #[test]
    fn keys_separate_parameters() {
        let k = cache_key("{7,3}", 2, Some(3));
        assert_eq!(k.len(), 64);
        assert_ne!(k, cache_key("{7,3}", 3, Some(3)));
        assert_ne!(k, cache_key("{7,3}", 2, None));
        assert_ne!(k, cache_key("{3,7}", 2, Some(3)));
        assert_eq!(k, cache_key(" {7,3} ", 2, Some(3)));
    }
}
