//! Saddle connections and holonomy vectors.
//!
//! A corner is singular when it is a cone point, i.e. when its commutator
//! cycle is longer than one. Horizontal saddle connections are traced by
//! iterating σ along the bottom edges of squares; every other direction is
//! first rotated to the horizontal with an SL(2,Z) word.
//!
//! The one-square torus has no cone point; its vertex is treated as a
//! marked point, so its holonomy set is exactly the primitive vectors.
//! Larger genus-one surfaces have no such point and no saddle connections.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::canonical::{canonical_key, Canonicalizer};
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::sl2z::{act_s, apply_word, generator_images, reduce_to_horizontal, DEFAULT_ORBIT_CAP};
use crate::topology::{gcd, is_reduced};

/// Default cap on the radius accepted by [`hol_ball`].
pub const DEFAULT_RADIUS_CAP: f64 = 64.0;

/// An integer holonomy vector `(a, b) ≠ (0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolonomyVector {
    pub a: i64,
    pub b: i64,
}

impl HolonomyVector {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if (a, b) == (0, 0) {
            return Err(Error::ZeroVector);
        }
        Ok(HolonomyVector { a, b })
    }

    /// Coprime coordinates, i.e. a member of RP.
    pub fn is_primitive(&self) -> bool {
        gcd(self.a, self.b) == 1
    }

    pub fn norm(&self) -> f64 {
        ((self.a * self.a + self.b * self.b) as f64).sqrt()
    }

    pub fn norm_squared(&self) -> i64 {
        self.a * self.a + self.b * self.b
    }
}

/// Number of rightward horizontal saddle connections of each length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaddleInventory {
    pub lengths: BTreeMap<usize, usize>,
}

impl SaddleInventory {
    pub fn count(&self, length: usize) -> usize {
        self.lengths.get(&length).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.lengths.values().sum()
    }
}

/// `singular[i]` tells whether the bottom-left corner of square `i` is a
/// cone point (or the marked point of the one-square torus).
pub fn singular_corners(o: &Origami) -> Vec<bool> {
    if o.n() == 1 {
        return vec![true];
    }
    let c = o.commutator();
    (0..o.n()).map(|i| c.apply(i) != i).collect()
}

fn checked_corners(o: &Origami) -> Result<Vec<bool>> {
    let corners = singular_corners(o);
    if corners.iter().any(|&x| x) {
        Ok(corners)
    } else {
        Err(Error::NoSaddles)
    }
}

/// Rightward saddle connections from each singular corner.
///
/// A cone point of angle `2πk` is the bottom-left corner of exactly `k`
/// squares, one per outgoing horizontal ray. Along the ray from square `i`
/// the corners met are those of `σ(i)`, `σ²(i)`, …; the saddle ends at the
/// first singular one.
pub fn horizontal_saddles(o: &Origami, lmax: usize) -> Result<SaddleInventory> {
    let corners = checked_corners(o)?;
    Ok(trace_horizontal(o, &corners, lmax))
}

fn trace_horizontal(o: &Origami, corners: &[bool], lmax: usize) -> SaddleInventory {
    let sigma = o.sigma();
    let mut inv = SaddleInventory::default();
    for i in (0..o.n()).filter(|&i| corners[i]) {
        let mut j = sigma.apply(i);
        let mut len = 1;
        while !corners[j] && len < lmax {
            j = sigma.apply(j);
            len += 1;
        }
        if corners[j] {
            *inv.lengths.entry(len).or_insert(0) += 1;
        }
    }
    inv
}

/// Whether some square has a singular bottom-left corner and a singular
/// bottom-right corner.
pub fn has_horizontal_unit_saddle(o: &Origami) -> bool {
    let corners = singular_corners(o);
    (0..o.n()).any(|i| corners[i] && corners[o.sigma().apply(i)])
}

/// A saddle connection of holonomy `(±1, 0)` or `(0, ±1)`: horizontal on
/// `o` or on `S·o`.
pub fn has_unit_saddle(o: &Origami) -> Result<bool> {
    checked_corners(o)?;
    Ok(has_horizontal_unit_saddle(o) || has_horizontal_unit_saddle(&act_s(o)))
}

/// Whether `v` is the holonomy of a saddle connection. With `v = k·(p, q)`
/// and `M·(p, q) = (1, 0)`, this asks for a horizontal saddle of length `k`
/// on `M·o`.
pub fn hol_contains(o: &Origami, v: HolonomyVector) -> Result<bool> {
    checked_corners(o)?;
    let (word, k) = reduce_to_horizontal((v.a, v.b))?;
    let m = apply_word(o, &word);
    let corners = singular_corners(&m);
    Ok(trace_horizontal(&m, &corners, k as usize).count(k as usize) > 0)
}

/// Holonomy vectors of length at most `r`, as a set. Radii above
/// [`DEFAULT_RADIUS_CAP`] are refused; see [`hol_ball_with_cap`].
pub fn hol_ball(o: &Origami, r: f64) -> Result<BTreeSet<HolonomyVector>> {
    hol_ball_with_cap(o, r, DEFAULT_RADIUS_CAP)
}

pub fn hol_ball_with_cap(o: &Origami, r: f64, cap: f64) -> Result<BTreeSet<HolonomyVector>> {
    Ok(hol_ball_counts_with_cap(o, r, cap)?.into_keys().collect())
}

/// Holonomy vectors of length at most `r` with the number of saddle
/// connections realizing each.
pub fn hol_ball_counts(o: &Origami, r: f64) -> Result<BTreeMap<HolonomyVector, usize>> {
    hol_ball_counts_with_cap(o, r, DEFAULT_RADIUS_CAP)
}

pub fn hol_ball_counts_with_cap(
    o: &Origami,
    r: f64,
    cap: f64,
) -> Result<BTreeMap<HolonomyVector, usize>> {
    if r > cap {
        return Err(Error::RadiusCap { radius: r, cap });
    }
    checked_corners(o)?;
    let mut out = BTreeMap::new();
    if r < 1.0 {
        return Ok(out);
    }
    let bound = r.floor() as i64;
    let r2 = r * r;
    for p in -bound..=bound {
        for q in -bound..=bound {
            if gcd(p, q) != 1 || ((p * p + q * q) as f64) > r2 {
                continue;
            }
            let kmax = (r / ((p * p + q * q) as f64).sqrt()).floor() as usize;
            let (word, _) = reduce_to_horizontal((p, q))?;
            let m = apply_word(o, &word);
            let corners = singular_corners(&m);
            for (len, count) in trace_horizontal(&m, &corners, kmax).lengths {
                let k = len as i64;
                out.insert(HolonomyVector { a: k * p, b: k * q }, count);
            }
        }
    }
    Ok(out)
}

/// Every surface in the SL(2,Z) orbit has a unit horizontal saddle
/// connection, i.e. every primitive vector is a holonomy vector. Walks the
/// orbit and stops at the first surface without one.
pub fn is_visibility(o: &Origami) -> Result<bool> {
    is_visibility_with_cap(o, DEFAULT_ORBIT_CAP)
}

pub fn is_visibility_with_cap(o: &Origami, cap: usize) -> Result<bool> {
    if !is_reduced(o) {
        return Err(Error::NotReduced("visibility"));
    }
    let start = canonical_key(o);
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    let mut canon = Canonicalizer::new(o.n());
    while let Some(key) = stack.pop() {
        if !has_horizontal_unit_saddle(&key.origami()) {
            return Ok(false);
        }
        for img in generator_images(&mut canon, &key) {
            if seen.insert(img.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                stack.push(img);
            }
        }
    }
    Ok(true)
}
