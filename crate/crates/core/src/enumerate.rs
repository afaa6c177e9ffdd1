//! Exhaustive census of connected origamis with `n` squares.
//!
//! σ runs over one permutation per cycle type and τ over all of `S_n`.
//! Every relabeling class contains a pair whose σ is the representative of
//! its cycle type, so the canonical keys seen cover every class. The work
//! is sharded by (cycle type of σ, τ(1)); classes with different σ cycle
//! types are different, so shards only need merging within a cycle type.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canonical::{CanonicalKey, Canonicalizer};
use crate::classify::{classify_keys, Flags};
use crate::error::{Error, Result};
use crate::origami::{connected_raw, Origami};
use crate::perm::{cycle_type_representatives, for_each_permutation_with_first};
use crate::sl2z::DEFAULT_ORBIT_CAP;
use crate::topology::Stratum;

/// Largest `n` enumerated unless the caller raises the cap.
pub const DEFAULT_MAX_N: usize = 9;

/// Largest `n` the enumerator accepts at all.
pub const HARD_MAX_N: usize = 10;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
    pub max_n: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            workers: 0,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl CensusOptions {
    pub fn with_workers(workers: usize) -> Self {
        CensusOptions {
            workers,
            ..CensusOptions::default()
        }
    }

    /// Runs `f` on a dedicated pool with the configured number of workers.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("failed to start worker threads");
        pool.install(f)
    }

    fn check(&self, n: usize) -> Result<()> {
        let cap = self.max_n.min(HARD_MAX_N);
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        if n > cap {
            return Err(Error::EnumerationCap { n, cap });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub key: CanonicalKey,
    pub stratum: Stratum,
    pub flags: Flags,
    pub orbit_size: Option<usize>,
}

impl CensusRecord {
    pub fn n(&self) -> usize {
        self.key.n()
    }

    pub fn origami(&self) -> Origami {
        self.key.origami()
    }
}

/// Sorted canonical keys of all connected `n`-square origamis.
pub fn census_keys(n: usize, opts: &CensusOptions) -> Result<Vec<CanonicalKey>> {
    opts.check(n)?;
    Ok(opts.install(|| enumerate_keys(n)))
}

fn enumerate_keys(n: usize) -> Vec<CanonicalKey> {
    let reps = cycle_type_representatives(n);
    let shards: Vec<(usize, u32)> = (0..reps.len())
        .flat_map(|r| (0..n as u32).map(move |first| (r, first)))
        .collect();
    let shard_sets: Vec<HashSet<CanonicalKey>> = shards
        .par_iter()
        .map(|&(r, first)| {
            let sigma = reps[r].raw();
            let mut canon = Canonicalizer::new(n);
            let mut seen = HashSet::new();
            for_each_permutation_with_first(n, first, |tau| {
                if connected_raw(sigma, tau) {
                    seen.insert(canon.key(sigma, tau));
                }
            });
            seen
        })
        .collect();
    let mut by_type: Vec<HashSet<CanonicalKey>> = vec![HashSet::new(); reps.len()];
    for (&(r, _), set) in shards.iter().zip(shard_sets) {
        by_type[r].extend(set);
    }
    let mut keys: Vec<CanonicalKey> = by_type.into_iter().flatten().collect();
    keys.par_sort_unstable();
    keys
}

/// Every class with `n` squares, classified, sorted by key.
pub fn census(n: usize, opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
    census_filtered(n, opts, |_| true)
}

/// The records of [`census`] accepted by `filter`.
pub fn census_filtered(
    n: usize,
    opts: &CensusOptions,
    filter: impl Fn(&CensusRecord) -> bool + Sync + Send,
) -> Result<Vec<CensusRecord>> {
    let keys = census_keys(n, opts)?;
    opts.install(|| records(keys, filter))
}

/// The census restricted to one stratum. The stratum is an SL(2,Z)
/// invariant, so orbits never leave the slice.
pub fn census_stratum(n: usize, alpha: &Stratum, opts: &CensusOptions) -> Result<Vec<CensusRecord>> {
    opts.check(n)?;
    if n < alpha.min_squares() {
        return Ok(Vec::new());
    }
    let keys = census_keys(n, opts)?;
    opts.install(|| {
        let keys: Vec<CanonicalKey> = keys
            .into_par_iter()
            .filter(|k| crate::topology::stratum(&k.origami()) == *alpha)
            .collect();
        records(keys, |_| true)
    })
}

/// Classifies an arbitrary batch of keys into sorted records.
pub fn classify_records(mut keys: Vec<CanonicalKey>) -> Result<Vec<CensusRecord>> {
    keys.sort_unstable();
    keys.dedup();
    records(keys, |_| true)
}

fn records(
    keys: Vec<CanonicalKey>,
    filter: impl Fn(&CensusRecord) -> bool + Sync + Send,
) -> Result<Vec<CensusRecord>> {
    let classes = classify_keys(&keys, DEFAULT_ORBIT_CAP)?;
    Ok(keys
        .into_iter()
        .zip(classes)
        .map(|(key, c)| CensusRecord {
            key,
            stratum: c.stratum,
            flags: c.flags,
            orbit_size: c.orbit_size,
        })
        .filter(|r| filter(r))
        .collect())
}

/// Tallies matching the rows of the census tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: usize,
    pub reduced: usize,
    pub primitive: usize,
    pub normal: usize,
    pub holonomy: usize,
    pub visibility: usize,
    /// Reduced surfaces that are not visibility tori.
    pub non_visibility: usize,
    pub symmetry: usize,
    pub characteristic: usize,
    pub unit_saddle: usize,
}

impl CensusSummary {
    pub fn of<'a>(records: impl IntoIterator<Item = &'a CensusRecord>) -> Self {
        let mut s = CensusSummary::default();
        for r in records {
            let f = r.flags;
            s.total += 1;
            s.reduced += f.reduced as usize;
            s.primitive += f.primitive as usize;
            s.normal += f.normal as usize;
            s.holonomy += f.holonomy as usize;
            s.visibility += f.visibility as usize;
            s.non_visibility += (f.reduced && !f.visibility) as usize;
            s.symmetry += f.symmetry as usize;
            s.characteristic += f.characteristic as usize;
            s.unit_saddle += f.unit_saddle as usize;
        }
        s
    }
}
