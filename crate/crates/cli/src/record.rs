use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use hurwitz_core::spectral::{PoleBasisDifferential, TrEngine};
use hurwitz_core::ENGINE_VERSION;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RecordKey {
    pub pipeline: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

impl RecordKey {
    pub fn hurwitz(pipeline: &str, g: u32, mu: &[u32]) -> Self {
        RecordKey {
            pipeline: pipeline.to_string(),
            g: Some(g),
            n: None,
            mu: Some(mu.to_vec()),
            d: None,
            m: None,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub pipeline: String,
    pub engine: String,
}

/// One computed value. `value` is a canonical rational string; `timestamp` (Unix
/// seconds) is set only on cached copies so that printed output is reproducible.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ResultRecord {
    pub key: RecordKey,
    pub value: String,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl ResultRecord {
    pub fn new(key: RecordKey, value: String) -> Self {
        let pipeline = key.pipeline.clone();
        ResultRecord {
            key,
            value,
            provenance: Provenance {
                pipeline,
                engine: ENGINE_VERSION.to_string(),
            },
            timestamp: None,
        }
    }

    pub fn without_timestamp(mut self) -> Self {
        self.timestamp = None;
        self
    }
}

/// Sorted-key JSON, so identical values always print identically.
pub fn to_sorted_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("plain data serializes");
    serde_json::to_string_pretty(&value).expect("values serialize")
}

/// Files under `<root>/<engine version>/`, so a version bump starts from empty.
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache {
            root: dir.join(ENGINE_VERSION),
        }
    }

    fn record_path(&self, key: &RecordKey) -> PathBuf {
        let mu = key
            .mu
            .as_ref()
            .map(|v| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("_"))
            .unwrap_or_default();
        self.root
            .join("hurwitz")
            .join(&key.pipeline)
            .join(format!("g{}-mu{mu}.json", key.g.unwrap_or(0)))
    }

    /// A stored record for `key`, ignoring unreadable or mismatched files.
    pub fn get(&self, key: &RecordKey) -> Option<ResultRecord> {
        let text = fs::read_to_string(self.record_path(key)).ok()?;
        let rec: ResultRecord = serde_json::from_str(&text).ok()?;
        (rec.key == *key && rec.provenance.engine == ENGINE_VERSION).then_some(rec)
    }

    pub fn put(&self, rec: &ResultRecord) -> std::io::Result<()> {
        let path = self.record_path(&rec.key);
        fs::create_dir_all(path.parent().expect("record paths have a parent"))?;
        let stamped = ResultRecord {
            timestamp: Some(SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)),
            ..rec.clone()
        };
        fs::write(path, to_sorted_json(&stamped))
    }

    fn omega_dir(&self, curve: &str) -> PathBuf {
        self.root.join("omega").join(curve)
    }

    /// Seeds `engine` with every stored correlator for its curve.
    pub fn load_omegas(&self, engine: &TrEngine) {
        let Ok(entries) = fs::read_dir(self.omega_dir(engine.curve().name())) else {
            return;
        };
        for entry in entries.flatten() {
            let parsed = fs::read_to_string(entry.path())
                .ok()
                .and_then(|t| serde_json::from_str::<serde_json::Value>(&t).ok())
                .and_then(|v| PoleBasisDifferential::from_json(&v).ok());
            if let Some(w) = parsed {
                engine.insert(w);
            }
        }
    }

    /// Stores the stable correlators with `2g - 2 + n ≤ max_chi` held by `engine`.
    pub fn store_omegas(&self, engine: &TrEngine, max_chi: u32) -> std::io::Result<()> {
        let dir = self.omega_dir(engine.curve().name());
        fs::create_dir_all(&dir)?;
        for (g, n) in hurwitz_core::verify::stable_range(max_chi) {
            if let Some(w) = engine.cached(g, n) {
                let path = dir.join(format!("g{g}-n{n}.json"));
                if !path.exists() {
                    fs::write(path, to_sorted_json(&w.to_json()))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_survives_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let rec = ResultRecord::new(RecordKey::hurwitz("cutjoin", 1, &[2, 1]), "5/2".into());
        cache.put(&rec).unwrap();
        let back = cache.get(&rec.key).unwrap();
        assert!(back.timestamp.is_some());
        assert_eq!(back.clone().without_timestamp(), rec);
        let text = to_sorted_json(&back);
        assert_eq!(serde_json::from_str::<ResultRecord>(&text).unwrap(), back);
    }

    #[test]
    fn other_keys_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        cache.put(&ResultRecord::new(RecordKey::hurwitz("tr", 0, &[3]), "1".into())).unwrap();
        assert!(cache.get(&RecordKey::hurwitz("tr", 0, &[2])).is_none());
        assert!(cache.get(&RecordKey::hurwitz("oracle", 0, &[3])).is_none());
    }
}
