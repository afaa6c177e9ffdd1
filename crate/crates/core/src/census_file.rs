//! Plain-text census files.
//!
//! ```text
//! #sts-census v1 n=3
//! 1,2,3|2,3,1|-|N
//! 2,3,1|1,3,2|2|RPHVU
//! ```
//!
//! Each line holds the canonical representative's σ and τ in 1-based
//! one-line form, the stratum (`-` in genus one) and the flag letters.
//! Lines are sorted by key, so serialization is deterministic and parsing
//! followed by serialization reproduces the input byte for byte.

use std::fmt::Write as _;

use crate::canonical::canonical_key;
use crate::enumerate::CensusRecord;
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::topology::Stratum;

const MAGIC: &str = "#sts-census v1 n=";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusFile {
    pub n: usize,
    records: Vec<CensusRecord>,
}

impl CensusFile {
    /// Sorts the records by key. Every record must have `n` squares.
    pub fn new(n: usize, mut records: Vec<CensusRecord>) -> Result<Self> {
        if let Some(r) = records.iter().find(|r| r.n() != n) {
            return Err(Error::SizeMismatch { left: n, right: r.n() });
        }
        records.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(CensusFile { n, records })
    }

    pub fn records(&self) -> &[CensusRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<CensusRecord> {
        self.records
    }

    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(16 + self.records.len() * (4 * self.n + 12));
        writeln!(out, "{MAGIC}{}", self.n).unwrap();
        for r in &self.records {
            let o = r.origami();
            writeln!(
                out,
                "{}|{}|{}|{}",
                o.sigma().to_one_line(),
                o.tau().to_one_line(),
                r.stratum.to_field(),
                r.flags
            )
            .unwrap();
        }
        out
    }

    /// Parses a census file. Lines must be canonical representatives in
    /// strictly increasing order; orbit sizes are not stored and come back
    /// as `None`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let header = lines.next().map(|(_, l)| l).unwrap_or("");
        let n: usize = header
            .strip_prefix(MAGIC)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad census header `{header}`")))?;
        let mut records: Vec<CensusRecord> = Vec::new();
        for (i, line) in lines {
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", i + 1));
            let fields: Vec<&str> = line.split('|').collect();
            let [sigma, tau, alpha, flags] = fields[..] else {
                return Err(at(format!("expected 4 fields, got {}", fields.len())));
            };
            let perm = |s: &str| -> Result<Permutation> {
                let images = s
                    .split(',')
                    .map(|x| x.parse::<usize>().map_err(|_| at(format!("bad label `{x}`"))))
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(&images)
            };
            let o = Origami::new(perm(sigma)?, perm(tau)?)?;
            if o.n() != n {
                return Err(at(format!("{} squares in a census of {n}", o.n())));
            }
            let key = canonical_key(&o);
            if key.origami() != o {
                return Err(at("surface is not in canonical form".into()));
            }
            if records.last().is_some_and(|r| r.key >= key) {
                return Err(at("records are not strictly increasing".into()));
            }
            let stratum: Stratum = alpha.parse()?;
            if alpha != stratum.to_field() {
                return Err(at(format!("stratum `{alpha}` is not in normal form")));
            }
            records.push(CensusRecord {
                key,
                stratum,
                flags: flags.parse()?,
                orbit_size: None,
            });
        }
        Ok(CensusFile { n, records })
    }
}
