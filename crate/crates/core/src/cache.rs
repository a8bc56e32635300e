//! Append-only cache of exact solver results, one JSON record per line.
//!
//! Each record carries a SHA-256 checksum of its payload. Records that fail to
//! parse or whose checksum does not match are skipped with a warning.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::{ColoringFile, EdgeColoring};
use crate::error::Result;
use crate::patterns::ThetaPattern;
use crate::solver::{SearchStats, SolverResult};

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "RAINBOW_WHEELS_CACHE_DIR";
pub const CACHE_FILE_NAME: &str = "solve-cache.ndjson";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub d: usize,
    pub s: usize,
    pub t: usize,
    pub chords: Vec<usize>,
    /// `exact` or `probe`; the two differ only in their search statistics.
    pub mode: String,
}

impl CacheKey {
    pub fn new(d: usize, s: usize, p: &ThetaPattern, mode: &str) -> Self {
        CacheKey { d, s, t: p.t(), chords: p.chords().to_vec(), mode: mode.to_string() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Payload {
    key: CacheKey,
    ar_value: usize,
    rb_value: usize,
    certified_by_search: bool,
    witness: ColoringFile,
    stats: SearchStats,
}

#[derive(Serialize, Deserialize)]
struct Record {
    payload: Payload,
    checksum: String,
}

fn checksum(payload: &Payload) -> String {
    let bytes = serde_json::to_vec(payload).expect("payload serializes");
    hex::encode(Sha256::digest(&bytes))
}

#[derive(Debug)]
pub struct SolveCache {
    path: PathBuf,
    entries: HashMap<CacheKey, Payload>,
}

impl SolveCache {
    /// The cache file under `$RAINBOW_WHEELS_CACHE_DIR`, if that variable is set.
    pub fn default_path() -> Option<PathBuf> {
        std::env::var_os(CACHE_DIR_ENV).map(|dir| PathBuf::from(dir).join(CACHE_FILE_NAME))
    }

    /// Loads `path`, creating nothing until the first insert.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (n, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Record>(&line) {
                    Ok(r) if checksum(&r.payload) == r.checksum => {
                        entries.insert(r.payload.key.clone(), r.payload);
                    }
                    Ok(_) => log::warn!("{}:{}: checksum mismatch, record ignored", path.display(), n + 1),
                    Err(e) => log::warn!("{}:{}: unreadable record ignored: {e}", path.display(), n + 1),
                }
            }
        }
        Ok(SolveCache { path, entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &CacheKey) -> Option<SolverResult> {
        let p = self.entries.get(key)?;
        let text = serde_json::to_string(&p.witness).ok()?;
        let witness = match EdgeColoring::from_json(&text) {
            Ok(w) => w,
            Err(e) => {
                log::warn!("cached witness for {key:?} is invalid: {e}");
                return None;
            }
        };
        Some(SolverResult {
            ar_value: p.ar_value,
            rb_value: p.rb_value,
            witness,
            certified_by_search: p.certified_by_search,
            stats: p.stats.clone(),
        })
    }

    pub fn insert(&mut self, key: CacheKey, result: &SolverResult) -> Result<()> {
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let payload = Payload {
            key: key.clone(),
            ar_value: result.ar_value,
            rb_value: result.rb_value,
            certified_by_search: result.certified_by_search,
            witness: result.witness.to_file(),
            stats: result.stats.clone(),
        };
        let record = Record { checksum: checksum(&payload), payload };
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{}", serde_json::to_string(&record).expect("record serializes"))?;
        self.entries.insert(key, record.payload);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WheelGraph;
    use crate::solver::{solve_exact, SolveOptions};

    fn solved() -> (CacheKey, SolverResult) {
        let g = WheelGraph::wheel(5).unwrap();
        let p = ThetaPattern::cycle(3).unwrap();
        let r = solve_exact(&g, &p, SolveOptions::default()).unwrap().exact().unwrap().clone();
        (CacheKey::new(5, 1, &p, "exact"), r)
    }

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested").join(CACHE_FILE_NAME);
        let (key, r) = solved();
        let mut cache = SolveCache::open(&path).unwrap();
        assert!(cache.get(&key).is_none());
        cache.insert(key.clone(), &r).unwrap();
        let reopened = SolveCache::open(&path).unwrap();
        let hit = reopened.get(&key).unwrap();
        assert_eq!(hit.rb_value, 7);
        assert_eq!(hit.witness, r.witness);
        assert_eq!(serde_json::to_string(&hit).unwrap(), serde_json::to_string(&r).unwrap());
    }

    #[test]
    fn corrupt_records_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE_NAME);
        let (key, r) = solved();
        SolveCache::open(&path).unwrap().insert(key.clone(), &r).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let tampered = text.replacen("\"rb_value\":7", "\"rb_value\":8", 1);
        assert_ne!(text, tampered);
        fs::write(&path, format!("{tampered}not json\n")).unwrap();
        let cache = SolveCache::open(&path).unwrap();
        assert!(cache.is_empty());
    }
}
