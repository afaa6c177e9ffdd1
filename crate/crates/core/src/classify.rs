//! Classification flags for reduced surfaces and the fake tori.
//!
//! Visibility and symmetry depend on the whole SL(2,Z) orbit, so batches of
//! surfaces are classified through an [`OrbitPartition`]: the local flags
//! are computed once per surface and then combined orbit by orbit.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::holonomy::{has_horizontal_unit_saddle, singular_corners};
use crate::origami::Origami;
use crate::sl2z::{act_s, OrbitPartition, DEFAULT_ORBIT_CAP};
use crate::topology::{
    is_group_primitive, is_holonomy_torus, is_normal, is_reduced, stratum, Stratum,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    pub reduced: bool,
    pub primitive: bool,
    pub normal: bool,
    pub holonomy: bool,
    pub visibility: bool,
    pub symmetry: bool,
    pub characteristic: bool,
    pub unit_saddle: bool,
}

const LETTERS: [char; 8] = ['R', 'P', 'N', 'H', 'V', 'S', 'C', 'U'];

impl Flags {
    /// The flags in `RPNHVSCU` order.
    pub fn bits(&self) -> [bool; 8] {
        [
            self.reduced,
            self.primitive,
            self.normal,
            self.holonomy,
            self.visibility,
            self.symmetry,
            self.characteristic,
            self.unit_saddle,
        ]
    }

    /// The implications between the classes: characteristic surfaces are
    /// symmetry, holonomy and visibility tori, holonomy tori are visibility
    /// tori, characteristic is exactly normal plus symmetry, and every
    /// fake torus and primitive surface is reduced.
    pub fn implications_hold(&self) -> bool {
        let f = self;
        let implies = |a: bool, b: bool| !a || b;
        implies(f.characteristic, f.symmetry && f.holonomy && f.visibility)
            && implies(f.holonomy, f.visibility)
            && (f.normal && f.symmetry) == f.characteristic
            && implies(f.primitive || f.holonomy || f.visibility || f.symmetry, f.reduced)
            && implies(f.holonomy, f.unit_saddle)
    }
}

/// Letters `RPNHVSCU` of the set flags, in that order.
impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bit, c) in self.bits().into_iter().zip(LETTERS) {
            if bit {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Flags {
    type Err = Error;

    /// Inverse of `Display`; letters must appear in canonical order.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = [false; 8];
        let mut next = 0;
        for c in s.chars() {
            let pos = LETTERS[next..]
                .iter()
                .position(|&l| l == c)
                .ok_or_else(|| Error::Parse(format!("bad flag string `{s}`")))?;
            bits[next + pos] = true;
            next += pos + 1;
        }
        let [reduced, primitive, normal, holonomy, visibility, symmetry, characteristic, unit_saddle] =
            bits;
        Ok(Flags {
            reduced,
            primitive,
            normal,
            holonomy,
            visibility,
            symmetry,
            characteristic,
            unit_saddle,
        })
    }
}

/// Everything known about one surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub stratum: Stratum,
    pub flags: Flags,
    /// SL(2,Z) orbit size, computed for reduced surfaces only.
    pub orbit_size: Option<usize>,
}

impl Classification {
    pub fn genus(&self) -> usize {
        self.stratum.genus()
    }
}

/// The flags that do not depend on the orbit.
fn local(o: &Origami) -> Flags {
    let reduced = is_reduced(o);
    let corners = singular_corners(o);
    let has_corner = corners.iter().any(|&x| x);
    let horizontal_unit = has_corner && has_horizontal_unit_saddle(o);
    let unit_saddle = horizontal_unit || (has_corner && has_horizontal_unit_saddle(&act_s(o)));
    Flags {
        reduced,
        primitive: o.n() == 1 || (reduced && is_group_primitive(o)),
        normal: is_normal(o),
        holonomy: is_holonomy_torus(o),
        unit_saddle,
        ..Flags::default()
    }
}

/// Full classification of a single surface; reduced surfaces have their
/// orbit computed.
pub fn classify(o: &Origami) -> Result<Classification> {
    let mut out = classify_keys(&[canonical_key(o)], DEFAULT_ORBIT_CAP)?;
    Ok(out.pop().unwrap())
}

/// Classifies a batch of surfaces of any sizes. The orbits of the reduced
/// ones are closed under SL(2,Z) (adding surfaces outside the batch if
/// needed, up to `orbit_cap` in total).
pub fn classify_keys(keys: &[CanonicalKey], orbit_cap: usize) -> Result<Vec<Classification>> {
    let locals: Vec<(Stratum, Flags)> = keys
        .par_iter()
        .map(|k| {
            let o = k.origami();
            (stratum(&o), local(&o))
        })
        .collect();
    let reduced: Vec<CanonicalKey> = keys
        .iter()
        .zip(&locals)
        .filter(|(_, (_, f))| f.reduced)
        .map(|(k, _)| k.clone())
        .collect();
    let partition = OrbitPartition::close(reduced, orbit_cap)?;

    // every orbit member needs its own horizontal test, including those the
    // closure added
    let horizontal: Vec<bool> = partition
        .keys()
        .par_iter()
        .map(|k| {
            let o = k.origami();
            singular_corners(&o).iter().any(|&x| x) && has_horizontal_unit_saddle(&o)
        })
        .collect();
    let mut orbit_visible = vec![true; partition.orbit_count()];
    for (pos, &h) in horizontal.iter().enumerate() {
        if !h {
            orbit_visible[partition.orbit_of(pos)] = false;
        }
    }

    Ok(keys
        .iter()
        .zip(locals)
        .map(|(key, (stratum, mut flags))| {
            let mut orbit_size = None;
            if flags.reduced {
                let pos = partition.position(key).expect("reduced keys are in the partition");
                let size = partition.orbit_size_of(pos);
                orbit_size = Some(size);
                flags.visibility = orbit_visible[partition.orbit_of(pos)];
                flags.symmetry = size == 1;
                flags.characteristic = flags.normal && flags.symmetry;
            }
            Classification {
                stratum,
                flags,
                orbit_size,
            }
        })
        .collect())
}
