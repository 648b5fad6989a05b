//! Point-count cache: one JSON file of trace sums keyed by (a, p, degree),
//! replaced atomically on every write.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use ncforms::frobchar::{factor_record, CharPoly, FrobeniusRecord};
use ncforms::surface::{bad_fibers, trace_sum_with, Convention, PointContribution};

pub const FILE_NAME: &str = "pointcounts.json";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub a: i64,
    pub p: u64,
    pub degree: u32,
    /// Bad fibers over F_{p^degree}; good fibers are summed into `total`.
    pub contributions: Vec<PointContribution>,
    /// Σ of stalk traces over P¹(F_{p^degree}), before the convention sign.
    pub total: i64,
    pub version: String,
    pub timestamp: u64,
}

impl CacheRecord {
    pub fn compute(a: i64, p: u64, degree: u32) -> Result<Self> {
        let model = Convention::FROZEN.model;
        Ok(Self {
            a,
            p,
            degree,
            contributions: bad_fibers(p, a, degree, model)?,
            total: trace_sum_with(p, a, degree, model)?,
            version: VERSION.into(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        })
    }

    /// Equal up to bookkeeping fields.
    fn same_counts(&self, o: &Self) -> bool {
        (self.a, self.p, self.degree, self.total, &self.contributions)
            == (o.a, o.p, o.degree, o.total, &o.contributions)
    }
}

fn key(a: i64, p: u64, degree: u32) -> String {
    format!("a={a}/p={p}/degree={degree}")
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    records: BTreeMap<String, CacheRecord>,
}

pub struct PointCache {
    dir: PathBuf,
    enabled: bool,
    file: CacheFile,
    dirty: bool,
}

impl PointCache {
    /// With `enabled = false` nothing is written, and any record already on
    /// disk is checked against the recomputation.
    pub fn open(dir: &Path, enabled: bool) -> Result<Self> {
        let path = dir.join(FILE_NAME);
        let file = match fs::read_to_string(&path) {
            Ok(s) => serde_json::from_str(&s).with_context(|| format!("corrupt cache {}", path.display()))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => CacheFile::default(),
            Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
        };
        Ok(Self { dir: dir.to_path_buf(), enabled, file, dirty: false })
    }

    fn cached(&self, a: i64, p: u64, degree: u32) -> Option<&CacheRecord> {
        self.file.records.get(&key(a, p, degree)).filter(|r| r.version == VERSION)
    }

    /// Count every missing (a, p, degree), in parallel.
    fn ensure(&mut self, a: i64, primes: &[u64]) -> Result<()> {
        let todo: Vec<(u64, u32)> =
            primes.iter().flat_map(|&p| [(p, 1), (p, 2)]).filter(|&(p, d)| self.cached(a, p, d).is_none()).collect();
        let fresh: Vec<Result<CacheRecord>> = std::thread::scope(|s| {
            let handles: Vec<_> = todo.iter().map(|&(p, d)| s.spawn(move || CacheRecord::compute(a, p, d))).collect();
            handles.into_iter().map(|h| h.join().expect("point counting panicked")).collect()
        });
        for rec in fresh {
            let rec = rec?;
            self.file.records.insert(key(rec.a, rec.p, rec.degree), rec);
            self.dirty = true;
        }
        Ok(())
    }

    fn total(&self, a: i64, p: u64, degree: u32, fresh: &BTreeMap<(u64, u32), i64>) -> Result<i64> {
        if let Some(&t) = fresh.get(&(p, degree)) {
            return Ok(t);
        }
        self.cached(a, p, degree).map(|r| r.total).context("missing cache record")
    }

    /// Frobenius records for `primes`, from the cache where possible.
    pub fn records(&mut self, a: i64, primes: &[u64]) -> Result<Vec<FrobeniusRecord>> {
        let fresh: BTreeMap<(u64, u32), i64> = if self.enabled {
            self.ensure(a, primes)?;
            BTreeMap::new()
        } else {
            let recs: Vec<Result<CacheRecord>> = std::thread::scope(|s| {
                let hs: Vec<_> = primes
                    .iter()
                    .flat_map(|&p| [(p, 1u32), (p, 2)])
                    .map(|(p, d)| s.spawn(move || CacheRecord::compute(a, p, d)))
                    .collect();
                hs.into_iter().map(|h| h.join().expect("point counting panicked")).collect()
            });
            let mut fresh = BTreeMap::new();
            for rec in recs {
                let rec = rec?;
                self.check_against_disk(&rec)?;
                fresh.insert((rec.p, rec.degree), rec.total);
            }
            fresh
        };
        let sign = Convention::FROZEN.sign;
        primes
            .iter()
            .map(|&p| {
                let t1 = sign * self.total(a, p, 1, &fresh)?;
                let t2 = sign * self.total(a, p, 2, &fresh)?;
                Ok(factor_record(CharPoly::from_traces(p, a, t1, t2)?)?)
            })
            .collect()
    }

    fn check_against_disk(&self, rec: &CacheRecord) -> Result<()> {
        match self.cached(rec.a, rec.p, rec.degree) {
            Some(old) if !old.same_counts(rec) => bail!(
                "cache record {} disagrees with recomputation ({} vs {})",
                key(rec.a, rec.p, rec.degree),
                old.total,
                rec.total
            ),
            _ => Ok(()),
        }
    }

    /// Write the whole file through a temporary in the same directory.
    pub fn flush(&mut self) -> Result<()> {
        if !self.enabled || !self.dirty {
            return Ok(());
        }
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer_pretty(&mut tmp, &self.file)?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.dir.join(FILE_NAME))?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_and_uncached_records_agree() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = PointCache::open(dir.path(), true).unwrap();
        let a = c.records(2, &[5, 7]).unwrap();
        c.flush().unwrap();
        assert_eq!(c.file.records.len(), 4);

        let mut again = PointCache::open(dir.path(), true).unwrap();
        let b = again.records(2, &[5, 7]).unwrap();
        let mut off = PointCache::open(dir.path(), false).unwrap();
        let d = off.records(2, &[5, 7]).unwrap();
        for ((x, y), z) in a.iter().zip(&b).zip(&d) {
            assert_eq!(x.h, y.h);
            assert_eq!(x.h, z.h);
        }
    }

    #[test]
    fn tampered_cache_is_detected_without_cache() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = PointCache::open(dir.path(), true).unwrap();
        c.records(2, &[5]).unwrap();
        c.flush().unwrap();
        let path = dir.path().join(FILE_NAME);
        let mut file: CacheFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        file.records.get_mut(&key(2, 5, 1)).unwrap().total += 1;
        fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

        let mut off = PointCache::open(dir.path(), false).unwrap();
        assert!(off.records(2, &[5]).is_err());
    }
}
