#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use sts_core::origami::{is_connected, Origami};
use sts_core::perm::Permutation;

pub fn o(s: &str) -> Origami {
    Origami::parse(s).unwrap()
}

/// The quaternion origami: σ and τ are right multiplication by `i` and `j`
/// on `1, i, j, k, −1, −i, −j, −k`.
pub fn ew() -> Origami {
    o("(1,2,5,6)(3,8,7,4)|(1,3,5,7)(2,4,6,8)")
}

/// Two rows of six squares in `H(2,2,2)`.
pub fn ornithorynque() -> Origami {
    o("2,3,4,5,6,1,8,9,10,11,12,7|7,8,11,12,9,10,5,4,3,2,1,6")
}

/// A plus sign of five squares: a row `3 1 2` and a column `5 1 4`.
pub fn swiss_cross() -> Origami {
    o("(1,2,3)|(1,4,5)")
}

pub fn four_square() -> Origami {
    o("(1,2)(3,4)|(1,4)")
}

pub fn six_square_h11() -> Origami {
    o("(1,2,3,4)(5,6)|(1,5)(2,6)(3,4)")
}

pub fn l_shape() -> Origami {
    o("(1,2)|(1,3)")
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_images(&v).unwrap()
}

pub fn random_origami(rng: &mut StdRng, n: usize) -> Origami {
    loop {
        let (s, t) = (random_perm(rng, n), random_perm(rng, n));
        if is_connected(&s, &t) {
            return Origami::new(s, t).unwrap();
        }
    }
}

/// Straight-line saddle tracer that walks square by square in the
/// unfolded plane. Cone points come from gluing the four corners of every
/// square, not from the commutator, and no SL(2,Z) action is involved.
pub struct Tracer {
    n: usize,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    tau: Vec<usize>,
    tau_inv: Vec<usize>,
    /// Vertex class of each corner slot `4i + c`.
    class: Vec<usize>,
    singular: Vec<bool>,
}

const BL: usize = 0;
const BR: usize = 1;
const TL: usize = 2;
const TR: usize = 3;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Tracer {
    pub fn new(o: &Origami) -> Self {
        let n = o.n();
        let get = |p: &Permutation| (0..n).map(|i| p.apply(i)).collect::<Vec<_>>();
        let sigma = get(o.sigma());
        let tau = get(o.tau());
        let sigma_inv = get(&o.sigma().inverse());
        let tau_inv = get(&o.tau().inverse());
        let mut parent: Vec<usize> = (0..4 * n).collect();
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        };
        for i in 0..n {
            union(4 * i + BR, 4 * sigma[i] + BL);
            union(4 * i + TR, 4 * sigma[i] + TL);
            union(4 * i + TL, 4 * tau[i] + BL);
            union(4 * i + TR, 4 * tau[i] + BR);
        }
        let class: Vec<usize> = (0..4 * n).map(|x| find(&mut parent, x)).collect();
        let mut size = vec![0; 4 * n];
        for &c in &class {
            size[c] += 1;
        }
        // angle is a quarter turn per corner; the lone vertex of the
        // one-square torus is a marked point
        let singular = (0..4 * n).map(|x| n == 1 || size[class[x]] > 4).collect();
        Tracer {
            n,
            sigma,
            sigma_inv,
            tau,
            tau_inv,
            class,
            singular,
        }
    }

    pub fn has_cone_point(&self) -> bool {
        self.singular.iter().any(|&s| s)
    }

    fn h(&self, s: usize, dx: i64) -> usize {
        if dx > 0 {
            self.sigma[s]
        } else {
            self.sigma_inv[s]
        }
    }

    fn v(&self, s: usize, dy: i64) -> usize {
        if dy > 0 {
            self.tau[s]
        } else {
            self.tau_inv[s]
        }
    }

    /// Length (in multiples of `(p, q)`) of the saddle connection leaving
    /// the ray's start corner, if it ends within `kmax` steps.
    fn trace(&self, mut s: usize, p: i64, q: i64, kmax: usize) -> Option<usize> {
        let (a, b) = (p.abs(), q.abs());
        let end = match (p.signum(), q.signum()) {
            (1, 0) => BR,
            (-1, 0) => BL,
            (0, 1) => TL,
            (0, -1) => BL,
            (1, 1) => TR,
            (-1, 1) => TL,
            (1, -1) => BR,
            _ => BL,
        };
        for t in 1..=kmax {
            // cross the interior grid lines in the order the segment meets them
            let (mut i, mut j) = (1, 1);
            while i < a || j < b {
                if j >= b || (i < a && i * b < j * a) {
                    s = self.h(s, p);
                    i += 1;
                } else {
                    s = self.v(s, q);
                    j += 1;
                }
            }
            if self.singular[4 * s + end] {
                return Some(t);
            }
            if p != 0 {
                s = self.h(s, p);
            }
            if q != 0 {
                s = self.v(s, q);
            }
        }
        None
    }

    /// Saddle connections with holonomy a multiple of the primitive vector
    /// `(p, q)` and length at most `kmax·|(p, q)|`, counted per multiple.
    pub fn saddles(&self, p: i64, q: i64, kmax: usize) -> BTreeMap<usize, usize> {
        let start = match (p.signum(), q.signum()) {
            (1, _) | (0, 1) => {
                if q >= 0 {
                    BL
                } else {
                    TL
                }
            }
            (-1, 0) => BR,
            (0, -1) => TL,
            (-1, 1) => BR,
            _ => TR,
        };
        let mut out = BTreeMap::new();
        for s in 0..self.n {
            if self.singular[4 * s + start] {
                if let Some(t) = self.trace(s, p, q, kmax) {
                    *out.entry(t).or_insert(0) += 1;
                }
            }
        }
        out
    }

    pub fn contains(&self, a: i64, b: i64) -> bool {
        let g = gcd(a, b);
        let k = g as usize;
        self.saddles(a / g, b / g, k).contains_key(&k)
    }

    /// Holonomy vectors of norm at most `r` with their multiplicities.
    pub fn ball(&self, r: i64) -> BTreeMap<(i64, i64), usize> {
        let mut out = BTreeMap::new();
        for p in -r..=r {
            for q in -r..=r {
                if gcd(p, q) != 1 || p * p + q * q > r * r {
                    continue;
                }
                let kmax = ((r * r) as f64 / (p * p + q * q) as f64).sqrt().floor() as usize;
                for (t, c) in self.saddles(p, q, kmax) {
                    out.insert((t as i64 * p, t as i64 * q), c);
                }
            }
        }
        out
    }

    /// Number of vertex classes that are cone points.
    pub fn cone_points(&self) -> usize {
        let mut roots: Vec<usize> = (0..4 * self.n)
            .filter(|&x| self.singular[x])
            .map(|x| self.class[x])
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
