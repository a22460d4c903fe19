//! The memoized recurrence engine.
//!
//! One cache serves every size: the recurrence recurses from a partition of
//! `n` into partitions of smaller integers, so values for small shapes are
//! shared by every larger query.  The memo is behind an `RwLock`; concurrent
//! sweeps may race to compute the same entry, but both racers derive the same
//! integer, so last-writer-wins insertion is harmless and results are
//! deterministic.
//!
//! An optional on-disk cache uses one `partition-text TAB decimal-value` line
//! per entry.  Loading never trusts the file: entries are re-derived smallest
//! first, each checked by one fresh step of the recurrence against its (by
//! then already verified or freshly computed) sub-partitions, and any
//! mismatch rejects the file.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::arith::sign_pow;
use crate::partition::Partition;

#[derive(Debug, Error)]
pub enum CacheFileError {
    #[error("cache file I/O: {0}")]
    Io(#[from] io::Error),
    #[error("cache file line {line}: malformed entry `{text}`")]
    Malformed { line: usize, text: String },
    #[error(
        "cache file line {line}: stored value {stored} for ({partition}) fails the recurrence \
         (expected {expected})"
    )]
    Inconsistent {
        line: usize,
        partition: String,
        stored: BigInt,
        expected: BigInt,
    },
}

/// Memoized eigenvalue table: canonical part list ↦ exact `η_λ`.
pub struct EtaCache {
    map: RwLock<HashMap<Vec<u32>, BigInt>>,
}

impl EtaCache {
    pub fn new() -> Self {
        let mut map = HashMap::new();
        // Initial condition of the recurrence: the empty partition has η = 1.
        map.insert(Vec::new(), BigInt::one());
        EtaCache {
            map: RwLock::new(map),
        }
    }

    /// The exact eigenvalue `η_λ`.
    pub fn eta(&self, lambda: &Partition) -> BigInt {
        if let Some(v) = self.map.read().expect("eta memo poisoned").get(lambda.parts()) {
            return v.clone();
        }
        let h = lambda
            .principal_hook_size()
            .expect("nonempty: ∅ is preseeded in the memo");
        let hook_removed = lambda.remove_hook().expect("nonempty");
        let column_removed = lambda.remove_first_column().expect("nonempty");
        let value = recurrence_step(
            lambda.first_part(),
            h,
            &self.eta(&hook_removed),
            &self.eta(&column_removed),
        );
        self.map
            .write()
            .expect("eta memo poisoned")
            .insert(lambda.parts().to_vec(), value.clone());
        value
    }

    /// `|η_λ|`, the magnitude most of the inequalities are stated in.
    pub fn abs_eta(&self, lambda: &Partition) -> BigInt {
        self.eta(lambda).abs()
    }

    /// Number of memoized entries (including the empty partition).
    pub fn entry_count(&self) -> usize {
        self.map.read().expect("eta memo poisoned").len()
    }

    /// Write every memoized entry as `partition TAB value`, smallest sizes
    /// first and in part-list order within a size, so files are
    /// deterministic.  The empty partition is an initial condition, not data,
    /// and is skipped.
    pub fn save_to_file(&self, path: &Path) -> io::Result<usize> {
        let mut entries: Vec<(Vec<u32>, BigInt)> = self
            .map
            .read()
            .expect("eta memo poisoned")
            .iter()
            .filter(|(parts, _)| !parts.is_empty())
            .map(|(parts, v)| (parts.clone(), v.clone()))
            .collect();
        entries.sort_by(|a, b| {
            let size_a: u32 = a.0.iter().sum();
            let size_b: u32 = b.0.iter().sum();
            size_a.cmp(&size_b).then_with(|| a.0.cmp(&b.0))
        });
        let mut out = String::new();
        for (parts, value) in &entries {
            let partition = Partition::new(parts.clone()).expect("memo keys are canonical");
            writeln!(out, "{partition}\t{value}").expect("string write");
        }
        fs::write(path, out)?;
        Ok(entries.len())
    }

    /// Load a cache file, verifying each entry by one step of the recurrence
    /// before trusting it.  Returns the number of entries adopted.
    pub fn load_from_file(&self, path: &Path) -> Result<usize, CacheFileError> {
        let text = fs::read_to_string(path)?;
        let mut entries: Vec<(usize, Partition, BigInt)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let (partition_text, value_text) =
                raw.split_once('\t').ok_or_else(|| CacheFileError::Malformed {
                    line,
                    text: raw.to_string(),
                })?;
            let partition: Partition =
                partition_text
                    .parse()
                    .map_err(|_| CacheFileError::Malformed {
                        line,
                        text: raw.to_string(),
                    })?;
            let value: BigInt = value_text
                .trim()
                .parse()
                .map_err(|_| CacheFileError::Malformed {
                    line,
                    text: raw.to_string(),
                })?;
            entries.push((line, partition, value));
        }
        // Smallest first: by the time an entry is checked, everything the
        // recurrence step needs is either already verified or computed fresh.
        entries.sort_by_key(|(_, p, _)| (p.size(), p.parts().to_vec()));
        let adopted = entries.len();
        for (line, partition, stored) in entries {
            let expected = if partition.is_empty() {
                BigInt::one()
            } else {
                let h = partition.principal_hook_size().expect("nonempty");
                recurrence_step(
                    partition.first_part(),
                    h,
                    &self.eta(&partition.remove_hook().expect("nonempty")),
                    &self.eta(&partition.remove_first_column().expect("nonempty")),
                )
            };
            if stored != expected {
                return Err(CacheFileError::Inconsistent {
                    line,
                    partition: partition.to_string(),
                    stored,
                    expected,
                });
            }
            self.map
                .write()
                .expect("eta memo poisoned")
                .insert(partition.parts().to_vec(), stored);
        }
        Ok(adopted)
    }
}

impl Default for EtaCache {
    fn default() -> Self {
        EtaCache::new()
    }
}

/// One application of the recurrence:
/// `η_λ = (−1)^h (η_{λ−ĥ} + (−1)^{λ₁} h η_{λ−ĉ})`.
fn recurrence_step(first_part: u32, h: u32, eta_hook_removed: &BigInt, eta_column_removed: &BigInt) -> BigInt {
    let inner = eta_hook_removed + sign_pow(first_part) * BigInt::from(h) * eta_column_removed;
    sign_pow(h) * inner
}

/// One partition's eigenvalue with its spectral multiplicity `dim(λ)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueRecord {
    pub partition: Partition,
    pub eta: BigInt,
    pub multiplicity: BigInt,
}

/// The complete spectrum for a given `n`, one record per partition, in the
/// same descending lexicographic order the tables use.
pub fn spectrum(n: u32, cache: &EtaCache) -> Vec<EigenvalueRecord> {
    Partition::enumerate(n)
        .into_iter()
        .map(|partition| {
            let eta = cache.eta(&partition);
            let multiplicity = partition.multiplicity();
            EigenvalueRecord {
                partition,
                eta,
                multiplicity,
            }
        })
        .collect()
}
