//! On-disk cache of subgroup lattices, keyed by a hash of the Cayley table.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use slicegroup::{ElementSet, FiniteGroup, SubgroupLattice};

/// Bumped whenever the lattice ordering or the payload layout changes.
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub key: String,
    pub order: usize,
    pub subgroups: Vec<Vec<usize>>,
    pub mobius_top: Vec<i64>,
}

/// Hex SHA-256 of the order and the row-major multiplication table.
pub fn table_key(group: &FiniteGroup) -> String {
    let mut hasher = Sha256::new();
    hasher.update((group.order() as u64).to_le_bytes());
    for &v in group.table() {
        hasher.update(v.to_le_bytes());
    }
    hex::encode(hasher.finalize())
}

pub struct LatticeCache {
    dir: Option<PathBuf>,
    warned: std::cell::Cell<bool>,
}

impl LatticeCache {
    pub fn disabled() -> Self {
        LatticeCache {
            dir: None,
            warned: std::cell::Cell::new(false),
        }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        LatticeCache {
            dir: Some(dir.into()),
            warned: std::cell::Cell::new(false),
        }
    }

    fn path(dir: &Path, key: &str) -> PathBuf {
        dir.join(format!("lattice-{key}.json"))
    }

    fn warn(&self, msg: &str) {
        if !self.warned.replace(true) {
            eprintln!("warning: {msg}; continuing without cache");
        }
    }

    /// Builds the lattice of `group`, reusing a stored one when available.
    pub fn lattice(&self, group: &Arc<FiniteGroup>, cap: usize) -> slicegroup::Result<Arc<SubgroupLattice>> {
        let Some(dir) = &self.dir else {
            return Ok(Arc::new(SubgroupLattice::build(group, cap)?));
        };
        let key = table_key(group);
        if let Some(lattice) = self.load(dir, &key, group) {
            return Ok(Arc::new(lattice));
        }
        let lattice = SubgroupLattice::build(group, cap)?;
        self.store(dir, &key, &lattice);
        Ok(Arc::new(lattice))
    }

    fn load(&self, dir: &Path, key: &str, group: &Arc<FiniteGroup>) -> Option<SubgroupLattice> {
        let text = fs::read_to_string(Self::path(dir, key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.version != CACHE_VERSION || entry.key != key || entry.order != group.order() {
            return None;
        }
        if entry.subgroups.iter().flatten().any(|&x| x >= group.order()) {
            return None;
        }
        let sets = entry
            .subgroups
            .into_iter()
            .map(|members| ElementSet::from_indices(group.order(), members))
            .collect();
        let lattice = SubgroupLattice::from_subgroup_sets(group, sets).ok()?;
        lattice.seed_top_mobius(entry.mobius_top).ok()?;
        Some(lattice)
    }

    fn store(&self, dir: &Path, key: &str, lattice: &SubgroupLattice) {
        let entry = CacheEntry {
            version: CACHE_VERSION,
            key: key.to_string(),
            order: lattice.group().order(),
            subgroups: lattice.subgroups().iter().map(|s| s.members().to_vec()).collect(),
            mobius_top: {
                let mut values = vec![0; lattice.len()];
                for &(x, v) in lattice.mobius_column(lattice.top()) {
                    values[x as usize] = v;
                }
                values
            },
        };
        let payload = serde_json::to_string(&entry).expect("cache entries serialize");
        let result = fs::create_dir_all(dir).and_then(|_| {
            let path = Self::path(dir, key);
            let tmp = path.with_extension("json.tmp");
            fs::write(&tmp, payload)?;
            fs::rename(tmp, path)
        });
        if let Err(e) = result {
            self.warn(&format!("cannot write lattice cache in {}: {e}", dir.display()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use slicegroup::GroupExpr;

    #[test]
    fn round_trip_preserves_order_and_mobius() {
        let dir = tempfile::tempdir().unwrap();
        let g = GroupExpr::parse("S4").unwrap().build(64).unwrap();
        let cache = LatticeCache::at(dir.path());
        let first = cache.lattice(&g, 64).unwrap();
        let second = cache.lattice(&g, 64).unwrap();
        assert_eq!(first.len(), second.len());
        for i in 0..first.len() {
            assert_eq!(first.members(i), second.members(i));
            assert_eq!(first.mobius(i, first.top()).unwrap(), second.mobius(i, second.top()).unwrap());
        }
        assert!(LatticeCache::path(dir.path(), &table_key(&g)).exists());
    }

    #[test]
    fn stale_or_corrupt_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let g = GroupExpr::parse("S3").unwrap().build(64).unwrap();
        let path = LatticeCache::path(dir.path(), &table_key(&g));
        fs::write(&path, "not json").unwrap();
        let cache = LatticeCache::at(dir.path());
        assert_eq!(cache.lattice(&g, 64).unwrap().len(), 6);
        let mut entry: CacheEntry = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        entry.version += 1;
        entry.subgroups.pop();
        fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
        assert_eq!(cache.lattice(&g, 64).unwrap().len(), 6);
    }

    #[test]
    fn unwritable_directory_falls_back() {
        let file = tempfile::NamedTempFile::new().unwrap();
        let cache = LatticeCache::at(file.path().join("sub"));
        let g = GroupExpr::parse("C4").unwrap().build(64).unwrap();
        assert_eq!(cache.lattice(&g, 64).unwrap().len(), 3);
    }
}
