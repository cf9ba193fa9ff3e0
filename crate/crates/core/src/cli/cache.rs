//! Per-datum cache of the enumerated finite Weyl group.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::root_datum::RootDatum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedElement {
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub datum_hash: String,
    pub length_bound: usize,
    pub elements: Vec<CachedElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Rebuilt,
    Skipped,
}

pub fn datum_hash(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

pub fn cache_path(dir: &Path, hash: &str) -> PathBuf {
    dir.join(format!("{hash}.json"))
}

fn try_load(d: &RootDatum, path: &Path, hash: &str) -> Option<()> {
    let text = std::fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.datum_hash != hash || file.elements.iter().any(|e| e.length > file.length_bound) {
        return None;
    }
    let words: Vec<Vec<usize>> = file.elements.iter().map(|e| e.word.clone()).collect();
    let lengths: Vec<usize> = file.elements.iter().map(|e| e.length).collect();
    d.seed_weyl_table(&words, &lengths).ok().map(|_| ())
}

/// Seeds `d` from the cache when it is valid, otherwise enumerates and
/// rewrites it. Groups too large to enumerate are not cached.
pub fn warm(d: &RootDatum, dir: &Path, canonical: &str) -> std::io::Result<CacheStatus> {
    let hash = datum_hash(canonical);
    let path = cache_path(dir, &hash);
    if try_load(d, &path, &hash).is_some() {
        return Ok(CacheStatus::Hit);
    }
    let Ok(t) = d.weyl_table() else {
        return Ok(CacheStatus::Skipped);
    };
    let elements: Vec<CachedElement> = t
        .words
        .iter()
        .zip(&t.lengths)
        .map(|(w, &l)| CachedElement {
            word: w.iter().map(|&i| i as usize).collect(),
            length: l as usize,
        })
        .collect();
    let file = CacheFile {
        datum_hash: hash,
        length_bound: elements.iter().map(|e| e.length).max().unwrap_or(0),
        elements,
    };
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, serde_json::to_string(&file).expect("cache serializes"))?;
    Ok(CacheStatus::Rebuilt)
}
