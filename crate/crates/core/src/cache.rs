//! The on-disk result cache for group-derived data.
//!
//! Entries are keyed by canonical group label. A stale schema version is
//! recomputed and overwritten, never migrated.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::groupengine::{catalog_group, EngineError, PrimeGraph};
use crate::numtheory::factor_u64;
use crate::spectrumlab::Spectrum;

pub const CACHE_SCHEMA_VERSION: u32 = 1;
pub const CACHE_ENV_VAR: &str = "CSL_CACHE";

/// Cached derived data for one catalog group.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub label: String,
    pub order: u64,
    /// (class size, multiplicity), ascending by size
    pub class_sizes: Vec<(u64, u64)>,
    pub omega: Vec<u64>,
}

impl CacheEntry {
    /// Derives the entry from the engine.
    pub fn compute(label: &str) -> Result<CacheEntry, EngineError> {
        let g = catalog_group(label)?;
        let order = g.order()?;
        let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
        for c in g.conjugacy_classes()? {
            *mult.entry(c.size).or_insert(0) += 1;
        }
        let omega: Vec<u64> = g.element_orders()?.into_iter().collect();
        Ok(CacheEntry {
            schema_version: CACHE_SCHEMA_VERSION,
            label: label.to_string(),
            order,
            class_sizes: mult.into_iter().collect(),
            omega,
        })
    }

    /// N(G) reconstructed from the cached class sizes.
    pub fn spectrum(&self) -> Spectrum {
        let mult: BTreeMap<u64, u64> = self
            .class_sizes
            .iter()
            .filter(|(size, _)| *size > 1)
            .copied()
            .collect();
        Spectrum::with_multiplicities(mult, self.label.clone())
    }

    /// GK(G) reconstructed from the cached order and element orders.
    pub fn prime_graph(&self) -> PrimeGraph {
        let vertices: BTreeSet<u64> = factor_u64(self.order)
            .prime_support()
            .iter()
            .map(|p| u64::try_from(p).expect("order fits u64"))
            .collect();
        let omega: BTreeSet<u64> = self.omega.iter().copied().collect();
        let vs: Vec<u64> = vertices.iter().copied().collect();
        let mut edges = BTreeSet::new();
        for (i, &p) in vs.iter().enumerate() {
            for &q in &vs[i + 1..] {
                if omega.contains(&(p * q)) {
                    edges.insert((p, q));
                }
            }
        }
        PrimeGraph { vertices, edges }
    }
}

/// Cache directory resolution: an explicit path wins, otherwise the
/// CSL_CACHE environment variable; with neither, caching is off.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn resolve(explicit: Option<PathBuf>) -> Cache {
        let dir = explicit.or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from));
        Cache { dir }
    }

    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn entry_path(&self, label: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let key: String = label
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        Some(dir.join(format!("{key}.json")))
    }

    /// Loads a current-schema entry, or computes and stores one. The
    /// boolean reports whether the cache supplied the entry.
    pub fn load_or_compute(&self, label: &str) -> Result<(CacheEntry, bool), EngineError> {
        if let Some(path) = self.entry_path(label) {
            if let Ok(text) = std::fs::read_to_string(&path) {
                if let Ok(entry) = serde_json::from_str::<CacheEntry>(&text) {
                    if entry.schema_version == CACHE_SCHEMA_VERSION && entry.label == label {
                        return Ok((entry, true));
                    }
                }
            }
            let entry = CacheEntry::compute(label)?;
            if let Some(parent) = path.parent() {
                let _ = std::fs::create_dir_all(parent);
            }
            let _ = std::fs::write(&path, serde_json::to_string_pretty(&entry).unwrap());
            return Ok((entry, false));
        }
        Ok((CacheEntry::compute(label)?, false))
    }
}
