//! The SL(2,Z) action on origamis, orbits and Veech-group indices.
//!
//! With `T = [[1,1],[0,1]]` and `S = [[0,-1],[1,0]]` (rotation by a quarter
//! turn counterclockwise) the action on `(σ, τ)` is
//!
//! ```text
//! T · (σ, τ) = (σ, τσ⁻¹)        S · (σ, τ) = (τ⁻¹, σ)
//! ```
//!
//! composed right factor first. The holonomy of a path on `M · o` is `M`
//! applied to its holonomy on `o`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canonical::{canonical_key, CanonicalKey, Canonicalizer};
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::topology::{is_normal, is_reduced};

/// Default cap on the number of surfaces an orbit computation will visit.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

pub type Matrix = [[i64; 2]; 2];

pub const IDENTITY: Matrix = [[1, 0], [0, 1]];
pub const T: Matrix = [[1, 1], [0, 1]];
pub const S: Matrix = [[0, -1], [1, 0]];

/// One letter of a word in the generators: `T^a` or `S^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    T(i64),
    S(i64),
}

impl Move {
    pub fn matrix(self) -> Matrix {
        match self {
            Move::T(a) => [[1, a], [0, 1]],
            Move::S(k) => match k.rem_euclid(4) {
                0 => IDENTITY,
                1 => S,
                2 => [[-1, 0], [0, -1]],
                _ => [[0, 1], [-1, 0]],
            },
        }
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_apply(m: &Matrix, v: (i64, i64)) -> (i64, i64) {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

/// The matrix of a word whose first letter acts first.
pub fn word_matrix(word: &[Move]) -> Matrix {
    word.iter()
        .fold(IDENTITY, |acc, m| mat_mul(&m.matrix(), &acc))
}

pub fn act_t(o: &Origami) -> Origami {
    act_t_pow(o, 1)
}

pub fn act_t_inv(o: &Origami) -> Origami {
    act_t_pow(o, -1)
}

/// `T^a · (σ, τ) = (σ, τσ^{-a})`.
pub fn act_t_pow(o: &Origami, a: i64) -> Origami {
    let tau = o.tau().compose_unchecked(&o.sigma().pow(-a));
    Origami::new_unchecked(o.sigma().clone(), tau)
}

pub fn act_s(o: &Origami) -> Origami {
    Origami::new_unchecked(o.tau().inverse(), o.sigma().clone())
}

pub fn act_s_inv(o: &Origami) -> Origami {
    Origami::new_unchecked(o.tau().clone(), o.sigma().inverse())
}

pub fn act_s_pow(o: &Origami, k: i64) -> Origami {
    match k.rem_euclid(4) {
        0 => o.clone(),
        1 => act_s(o),
        2 => Origami::new_unchecked(o.sigma().inverse(), o.tau().inverse()),
        _ => act_s_inv(o),
    }
}

/// Applies a word, first letter first.
pub fn apply_word(o: &Origami, word: &[Move]) -> Origami {
    word.iter().fold(o.clone(), |acc, m| match *m {
        Move::T(a) => act_t_pow(&acc, a),
        Move::S(k) => act_s_pow(&acc, k),
    })
}

/// A word `M` with `M·v = (k, 0)` where `k = gcd(v) > 0`.
///
/// Euclid's algorithm: shear the first coordinate into `[0, |y|)` with a
/// power of `T`, rotate with `S`, repeat until the second coordinate
/// vanishes; a final `S²` fixes the sign.
pub fn reduce_to_horizontal(v: (i64, i64)) -> Result<(Vec<Move>, i64)> {
    if v == (0, 0) {
        return Err(Error::ZeroVector);
    }
    let (mut x, mut y) = v;
    let mut word = Vec::new();
    while y != 0 {
        let r = x.rem_euclid(y.abs());
        let a = (r - x) / y;
        if a != 0 {
            word.push(Move::T(a));
        }
        word.push(Move::S(1));
        (x, y) = (-y, r);
    }
    if x < 0 {
        word.push(Move::S(2));
        x = -x;
    }
    Ok((word, x))
}

/// Images of a raw pair under `T` and `S`, canonicalized.
pub(crate) fn generator_images(c: &mut Canonicalizer, key: &CanonicalKey) -> [CanonicalKey; 2] {
    let n = key.n();
    let sigma: Vec<u32> = key.sigma_images().iter().map(|&x| x as u32 - 1).collect();
    let tau: Vec<u32> = key.tau_images().iter().map(|&x| x as u32 - 1).collect();
    let mut sigma_inv = vec![0u32; n];
    let mut tau_inv = vec![0u32; n];
    for i in 0..n {
        sigma_inv[sigma[i] as usize] = i as u32;
        tau_inv[tau[i] as usize] = i as u32;
    }
    let t_tau: Vec<u32> = (0..n).map(|i| tau[sigma_inv[i] as usize]).collect();
    let t_key = c.key(&sigma, &t_tau);
    let s_key = c.key(&tau_inv, &sigma);
    [t_key, s_key]
}

/// An SL(2,Z) orbit of relabeling classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    representatives: Vec<CanonicalKey>,
}

impl OrbitSummary {
    pub fn size(&self) -> usize {
        self.representatives.len()
    }

    /// Canonical keys of the orbit, sorted.
    pub fn representatives(&self) -> &[CanonicalKey] {
        &self.representatives
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.representatives.binary_search(key).is_ok()
    }
}

pub fn orbit(o: &Origami) -> Result<OrbitSummary> {
    orbit_with_cap(o, DEFAULT_ORBIT_CAP)
}

/// Breadth-first closure under `T` and `S`. Each frontier is expanded in
/// parallel and merged in order, so the result does not depend on the
/// scheduling. Inverses are not needed because the orbit is finite.
pub fn orbit_with_cap(o: &Origami, cap: usize) -> Result<OrbitSummary> {
    let partition = OrbitPartition::close(vec![canonical_key(o)], cap)?;
    Ok(OrbitSummary {
        representatives: partition.keys,
    })
}

/// Index of the Veech group in SL(2,Z), i.e. the orbit size.
pub fn veech_index(o: &Origami) -> Result<usize> {
    if !is_reduced(o) {
        return Err(Error::NotReduced("the Veech index"));
    }
    Ok(orbit(o)?.size())
}

/// Reduced with an orbit of size one: fixed by both generators.
pub fn is_symmetry_torus(o: &Origami) -> bool {
    if !is_reduced(o) {
        return false;
    }
    let key = canonical_key(o);
    canonical_key(&act_t(o)) == key && canonical_key(&act_s(o)) == key
}

/// Normal symmetry torus.
pub fn is_characteristic(o: &Origami) -> bool {
    is_normal(o) && is_symmetry_torus(o)
}

/// Independent test: reduced, normal and fixed, up to relabeling, by the
/// Nielsen moves `(τ, σ)`, `(σ⁻¹, τ)` and `(στ, τ)`, which generate
/// `Aut(F₂)`. Non-reduced covers such as the Klein four-group origami pass
/// the Nielsen test but are not fake tori.
pub fn is_characteristic_nielsen(o: &Origami) -> bool {
    if !is_normal(o) || !is_reduced(o) {
        return false;
    }
    let (s, t) = (o.sigma(), o.tau());
    let key = canonical_key(o);
    let moves = [
        (t.clone(), s.clone()),
        (s.inverse(), t.clone()),
        (s.compose_unchecked(t), t.clone()),
    ];
    moves
        .into_iter()
        .all(|(a, b)| canonical_key(&Origami::new_unchecked(a, b)) == key)
}

/// The closure of a set of surfaces under SL(2,Z), split into orbits.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    /// All keys, sorted.
    keys: Vec<CanonicalKey>,
    /// Orbit id of each key; orbits are numbered by their least key.
    orbit_of: Vec<usize>,
    orbit_sizes: Vec<usize>,
}

impl OrbitPartition {
    /// Closes `seeds` under `T` and `S`, failing with
    /// [`Error::OrbitTooLarge`] once more than `cap` keys are reached.
    pub fn close(seeds: Vec<CanonicalKey>, cap: usize) -> Result<Self> {
        let mut index: HashMap<CanonicalKey, usize> = HashMap::new();
        let mut keys: Vec<CanonicalKey> = Vec::new();
        let mut frontier: Vec<usize> = Vec::new();
        for key in seeds {
            if !index.contains_key(&key) {
                index.insert(key.clone(), keys.len());
                frontier.push(keys.len());
                keys.push(key);
            }
        }
        if keys.len() > cap {
            return Err(Error::OrbitTooLarge { cap });
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        while !frontier.is_empty() {
            let images: Vec<[CanonicalKey; 2]> = frontier
                .par_iter()
                .map_init(|| Canonicalizer::new(0), |c, &i| generator_images(c, &keys[i]))
                .collect();
            let mut next = Vec::new();
            for (&src, imgs) in frontier.iter().zip(images) {
                for img in imgs {
                    let dst = match index.get(&img) {
                        Some(&d) => d,
                        None => {
                            let d = keys.len();
                            index.insert(img.clone(), d);
                            keys.push(img);
                            next.push(d);
                            d
                        }
                    };
                    edges.push((src, dst));
                }
            }
            if keys.len() > cap {
                return Err(Error::OrbitTooLarge { cap });
            }
            frontier = next;
        }
        drop(index);

        let mut parent: Vec<usize> = (0..keys.len()).collect();
        for (a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let roots: Vec<usize> = (0..keys.len()).map(|i| find(&mut parent, i)).collect();

        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut root_to_orbit: HashMap<usize, usize> = HashMap::new();
        let mut orbit_of = Vec::with_capacity(keys.len());
        let mut orbit_sizes = Vec::new();
        for &i in &order {
            let next_id = root_to_orbit.len();
            let id = *root_to_orbit.entry(roots[i]).or_insert(next_id);
            if id == orbit_sizes.len() {
                orbit_sizes.push(0);
            }
            orbit_sizes[id] += 1;
            orbit_of.push(id);
        }
        let mut slots: Vec<Option<CanonicalKey>> = keys.into_iter().map(Some).collect();
        let keys = order.iter().map(|&i| slots[i].take().unwrap()).collect();
        Ok(OrbitPartition {
            keys,
            orbit_of,
            orbit_sizes,
        })
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    pub fn position(&self, key: &CanonicalKey) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }

    /// Orbit id of the key at `position`.
    pub fn orbit_of(&self, position: usize) -> usize {
        self.orbit_of[position]
    }

    pub fn orbit_size_of(&self, position: usize) -> usize {
        self.orbit_sizes[self.orbit_of[position]]
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
