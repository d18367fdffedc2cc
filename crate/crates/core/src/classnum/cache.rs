//! Persistent `d,h` cache of class numbers.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter};
use std::path::Path;

use rayon::prelude::*;

use super::forms::class_number_forms;
use super::ClassNumbers;
use crate::arith::is_fundamental_discriminant;
use crate::error::{Error, Result};

/// Environment variable naming the default cache file for the CLI.
pub const CACHE_ENV: &str = "QRDIST_CACHE";

/// In-memory class numbers keyed by `|d|`, for negative discriminants.
///
/// Lookups that miss fall back to the forms count without storing, so the
/// cache only ever changes speed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassNumberCache {
    entries: BTreeMap<u64, u64>,
}

impl ClassNumberCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, d: i64) -> Option<u64> {
        if d >= 0 {
            return None;
        }
        self.entries.get(&d.unsigned_abs()).copied()
    }

    pub fn insert(&mut self, d: i64, h: u64) -> Result<()> {
        if d >= 0 || !is_fundamental_discriminant(d) {
            return Err(Error::domain(format!(
                "cache key {d} is not a negative fundamental discriminant"
            )));
        }
        match self.entries.insert(d.unsigned_abs(), h) {
            Some(old) if old != h => Err(Error::internal(format!(
                "conflicting class numbers for d = {d}: {old} and {h}"
            ))),
            _ => Ok(()),
        }
    }

    /// `(d, h)` in ascending `|d|`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&n, &h)| (-(n as i64), h))
    }

    /// Computes every missing discriminant with the forms count and merges
    /// the results. Returns how many were added.
    pub fn fill(&mut self, discriminants: &[i64]) -> Result<usize> {
        let mut missing: Vec<i64> = discriminants
            .iter()
            .copied()
            .filter(|&d| self.get(d).is_none())
            .collect();
        missing.sort_unstable();
        missing.dedup();
        let computed: Vec<(i64, u64)> = missing
            .par_iter()
            .map(|&d| class_number_forms(d).map(|h| (d, h)))
            .collect::<Result<_>>()?;
        for &(d, h) in &computed {
            self.insert(d, h)?;
        }
        Ok(computed.len())
    }

    /// Loads `path`, or returns an empty cache if it does not exist.
    pub fn load(path: &Path) -> Result<Self> {
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Self::new()),
            Err(e) => return Err(e.into()),
        };
        let mut reader = csv::Reader::from_reader(file);
        let headers = reader.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["d", "h"] {
            return Err(Error::usage(format!(
                "{}: expected header `d,h`",
                path.display()
            )));
        }
        let mut cache = Self::new();
        for row in reader.deserialize::<(i64, u64)>() {
            let (d, h) = row?;
            if cache.get(d).is_some() {
                return Err(Error::usage(format!(
                    "{}: duplicate entry d = {d}",
                    path.display()
                )));
            }
            cache.insert(d, h)?;
        }
        Ok(cache)
    }

    /// Writes the cache next to `path` and renames it into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut w = csv::Writer::from_writer(BufWriter::new(tmp.as_file()));
            w.write_record(["d", "h"])?;
            for (d, h) in self.iter() {
                w.serialize((d, h))?;
            }
            w.flush()?;
        }
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }
}

impl ClassNumbers for ClassNumberCache {
    fn class_number(&self, d: i64) -> Result<u64> {
        match self.get(d) {
            Some(h) => Ok(h),
            None => class_number_forms(d),
        }
    }
}
