//! Explicit surfaces: one-cylinder surfaces in any stratum, the split-square
//! non-visibility surfaces, and the cylinder parametrizations of `H(2)` and
//! `H(1,1)`.
//!
//! Every builder fills horizontal cylinders with squares row by row: the
//! squares of cylinder `c` are numbered consecutively after those of the
//! cylinders before it, bottom row first, left to right. σ moves right
//! within a row (cyclically), τ moves up within a cylinder, and the top
//! row of each cylinder is glued to the bottom row of some cylinder by a
//! gluing map `(cylinder, column) ↦ (cylinder, column)`. Shear parameters
//! shift the top edge to the right, so the square in column `c` of a top
//! row sits under position `(c − shear) mod width` of the top boundary.

use rayon::prelude::*;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::topology::{stratum, Stratum};

#[derive(Clone, Copy, Debug)]
struct Cylinder {
    width: usize,
    height: usize,
}

/// Assembles the pair from cylinders and the gluing of their top rows.
fn glue(cyls: &[Cylinder], top: impl Fn(usize, usize) -> (usize, usize)) -> Result<Origami> {
    let mut offset = Vec::with_capacity(cyls.len());
    let mut n = 0;
    for c in cyls {
        offset.push(n);
        n += c.width * c.height;
    }
    let mut sigma = vec![0usize; n];
    let mut tau = vec![0usize; n];
    for (ci, c) in cyls.iter().enumerate() {
        for row in 0..c.height {
            for col in 0..c.width {
                let i = offset[ci] + row * c.width + col;
                sigma[i] = offset[ci] + row * c.width + (col + 1) % c.width + 1;
                tau[i] = if row + 1 < c.height {
                    i + c.width + 1
                } else {
                    let (tc, tcol) = top(ci, col);
                    offset[tc] + tcol + 1
                };
            }
        }
    }
    Origami::new(Permutation::from_images(&sigma)?, Permutation::from_images(&tau)?)
}

fn shifted(col: usize, shear: usize, width: usize) -> usize {
    (col + width - shear % width) % width
}

/// One horizontal cylinder of `n` squares in the stratum `alpha`: σ is the
/// `n`-cycle and τ is built from blocks, one per even order and one per
/// pair of odd orders, with fixed "spacer" squares after the first block.
///
/// The block for an even order `2k` is `(1)(2,3)…(2k,2k+1)`. The block for
/// odd orders `2p−1, 2q−1` is `(1,2)…(2p−3,2p−2)`, then the bridge
/// `(2p−1,2p+1)(2p)`, then `(2p+2,2p+3)…(2p+2q−2,2p+2q−1)(2p+2q)`.
///
/// An even block that runs into an odd block, directly or through other
/// even blocks, would merge cone points. So when odd orders are present,
/// every even block not followed by spacers is mirrored to
/// `(1,2)…(2k−1,2k)(2k+1)`, which ends on a square glued to itself.
pub fn one_cylinder(alpha: &Stratum, n: usize) -> Result<Origami> {
    let min = alpha.min_squares();
    if n < min.max(1) {
        return Err(Error::TooFewSquares { n, min: min.max(1) });
    }
    let blocks = cylinder_blocks(alpha);
    let spacers = n - min;
    let mut tau: Vec<usize> = Vec::with_capacity(n);
    let has_odd = blocks.iter().any(|b| matches!(b, Block::Odd(..)));
    for (b, block) in blocks.iter().enumerate() {
        let followed_by_spacer = b == 0 && spacers > 0;
        let block = match block {
            Block::Even(k) if has_odd && !followed_by_spacer => mirrored_even_block(*k),
            _ => block.images(),
        };
        let base = tau.len();
        tau.extend(block.iter().map(|&x| base + x));
        if b == 0 {
            tau.extend(base + block.len()..base + block.len() + spacers);
        }
    }
    if blocks.is_empty() {
        tau.extend(0..n);
    }
    let sigma: Vec<usize> = (0..n).map(|i| (i + 1) % n + 1).collect();
    let tau: Vec<usize> = tau.into_iter().map(|x| x + 1).collect();
    let o = Origami::new(Permutation::from_images(&sigma)?, Permutation::from_images(&tau)?)?;
    debug_assert_eq!(stratum(&o), *alpha);
    Ok(o)
}

#[derive(Clone, Copy, Debug)]
enum Block {
    /// Order `2k`.
    Even(usize),
    /// Orders `2p − 1` and `2q − 1`.
    Odd(usize, usize),
}

impl Block {
    /// 0-based τ images relative to the block start.
    fn images(self) -> Vec<usize> {
        match self {
            Block::Even(k) => {
                let mut b = vec![0];
                for i in 0..k {
                    b.extend([2 * i + 2, 2 * i + 1]);
                }
                b
            }
            Block::Odd(p, q) => {
                let mut b = Vec::with_capacity(2 * p + 2 * q);
                for i in 0..p - 1 {
                    b.extend([2 * i + 1, 2 * i]);
                }
                let s = 2 * p - 2;
                b.extend([s + 2, s + 1, s]);
                let s = 2 * p + 1;
                for i in 0..q - 1 {
                    b.extend([s + 2 * i + 1, s + 2 * i]);
                }
                b.push(2 * p + 2 * q - 1);
                b
            }
        }
    }
}

fn mirrored_even_block(k: usize) -> Vec<usize> {
    let mut b = Vec::with_capacity(2 * k + 1);
    for i in 0..k {
        b.extend([2 * i + 1, 2 * i]);
    }
    b.push(2 * k);
    b
}

/// Even orders first, then the odd orders paired in decreasing order.
fn cylinder_blocks(alpha: &Stratum) -> Vec<Block> {
    let evens = alpha.alpha().iter().filter(|a| *a % 2 == 0).map(|&a| Block::Even(a / 2));
    let odds: Vec<usize> = alpha.alpha().iter().copied().filter(|a| a % 2 == 1).collect();
    let pairs = odds
        .chunks(2)
        .map(|pair| Block::Odd(pair[0].div_ceil(2), pair[1].div_ceil(2)));
    evens.chain(pairs).collect()
}

/// Starts from the one-cylinder surface with `2g − 2 + s` squares and
/// replaces one square glued to itself vertically by `2g − 1 + s` such
/// squares, giving a reduced surface with `4g − 4 + 2s` squares in the same
/// stratum that misses the holonomy vector `(2g − 2 + s, 1)`.
pub fn split_square_nonvisibility(alpha: &Stratum) -> Result<Origami> {
    if alpha.genus() < 2 {
        return Err(Error::InvalidStratum(
            "the split-square construction needs genus at least 2".into(),
        ));
    }
    let m = alpha.min_squares();
    let base = one_cylinder(alpha, m)?;
    let tau = base.tau();
    let split = (0..m)
        .find(|&i| tau.apply(i) == i)
        .expect("every block has a square glued to itself");
    // squares split..=split+m are the pieces; later squares shift by m
    let n = 2 * m;
    let relabel = |x: usize| if x > split { x + m } else { x };
    let mut t = vec![0usize; n];
    for i in 0..m {
        t[relabel(i)] = relabel(tau.apply(i));
    }
    for (piece, x) in t.iter_mut().enumerate().skip(split).take(m + 1) {
        *x = piece;
    }
    let sigma: Vec<usize> = (0..n).map(|i| (i + 1) % n + 1).collect();
    let t: Vec<usize> = t.into_iter().map(|x| x + 1).collect();
    Origami::new(Permutation::from_images(&sigma)?, Permutation::from_images(&t)?)
}

/// Cylinder parameters of a surface in `H(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H2Params {
    /// One cylinder of height `p` whose bottom reads `k, l, m` and whose
    /// top reads `k, m, l`, sheared by `alpha < k + l + m`.
    OneCylinder {
        k: usize,
        l: usize,
        m: usize,
        p: usize,
        alpha: usize,
    },
    /// A `k × p` cylinder with an `l × q` cylinder on top, `k > l`, shears
    /// `alpha < k` and `beta < l`.
    TwoCylinder {
        p: usize,
        q: usize,
        k: usize,
        l: usize,
        alpha: usize,
        beta: usize,
    },
}

impl H2Params {
    pub fn squares(&self) -> usize {
        match *self {
            H2Params::OneCylinder { k, l, m, p, .. } => (k + l + m) * p,
            H2Params::TwoCylinder { p, q, k, l, .. } => p * k + q * l,
        }
    }

    pub fn cylinders(&self) -> usize {
        match self {
            H2Params::OneCylinder { .. } => 1,
            H2Params::TwoCylinder { .. } => 2,
        }
    }
}

fn positive(vals: &[usize]) -> Result<()> {
    if vals.contains(&0) {
        return Err(Error::BadParameters(
            "widths and heights must be positive".into(),
        ));
    }
    Ok(())
}

fn below(name: &str, v: usize, bound: usize) -> Result<()> {
    if v >= bound {
        return Err(Error::BadParameters(format!(
            "{name} = {v} must be below {bound}"
        )));
    }
    Ok(())
}

pub fn build_h2(params: H2Params) -> Result<Origami> {
    match params {
        H2Params::OneCylinder { k, l, m, p, alpha } => {
            positive(&[k, l, m, p])?;
            let w = k + l + m;
            below("alpha", alpha, w)?;
            glue(&[Cylinder { width: w, height: p }], |_, c| {
                let t = shifted(c, alpha, w);
                let col = if t < k {
                    t
                } else if t < k + m {
                    k + l + (t - k)
                } else {
                    k + (t - k - m)
                };
                (0, col)
            })
        }
        H2Params::TwoCylinder {
            p,
            q,
            k,
            l,
            alpha,
            beta,
        } => {
            positive(&[p, q, k, l])?;
            if k <= l {
                return Err(Error::BadParameters(format!(
                    "the lower cylinder must be wider: k = {k}, l = {l}"
                )));
            }
            below("alpha", alpha, k)?;
            below("beta", beta, l)?;
            let cyls = [
                Cylinder { width: k, height: p },
                Cylinder { width: l, height: q },
            ];
            glue(&cyls, |cyl, c| {
                if cyl == 0 {
                    let t = shifted(c, alpha, k);
                    if t < l {
                        (1, t)
                    } else {
                        (0, t)
                    }
                } else {
                    (0, shifted(c, beta, l))
                }
            })
        }
    }
}

/// Cylinder parameters of a surface in `H(1,1)`, one variant per
/// separatrix diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H11Params {
    /// One cylinder of height `p`, bottom `j, k, l, m`, top `j, m, l, k`,
    /// shear `alpha < j + k + l + m`.
    A {
        p: usize,
        j: usize,
        k: usize,
        l: usize,
        m: usize,
        alpha: usize,
    },
    /// A cylinder of width `k + l + m`, height `p`, bottom `m, l, k`, whose
    /// top carries an `m × q` cylinder followed by `k` and `l`; shears
    /// `alpha < k + l + m`, `beta < m`.
    B {
        p: usize,
        q: usize,
        k: usize,
        l: usize,
        m: usize,
        alpha: usize,
        beta: usize,
    },
    /// Cylinders `(k + l) × p` and `(l + m) × q` overlapping along `l`;
    /// shears `alpha < k + l`, `beta < l + m`.
    C {
        p: usize,
        q: usize,
        k: usize,
        l: usize,
        m: usize,
        alpha: usize,
        beta: usize,
    },
    /// Three stacked cylinders `k × p`, `(k + l) × q`, `l × r`; shears
    /// `alpha < k`, `beta < k + l`, `gamma < l`.
    D {
        p: usize,
        q: usize,
        r: usize,
        k: usize,
        l: usize,
        alpha: usize,
        beta: usize,
        gamma: usize,
    },
}

impl H11Params {
    pub fn squares(&self) -> usize {
        match *self {
            H11Params::A { p, j, k, l, m, .. } => p * (j + k + l + m),
            H11Params::B { p, q, k, l, m, .. } => p * (k + l + m) + q * m,
            H11Params::C { p, q, k, l, m, .. } => p * (k + l) + q * (l + m),
            H11Params::D { p, q, r, k, l, .. } => p * k + q * (k + l) + r * l,
        }
    }
}

pub fn build_h11(params: H11Params) -> Result<Origami> {
    match params {
        H11Params::A {
            p,
            j,
            k,
            l,
            m,
            alpha,
        } => {
            positive(&[p, j, k, l, m])?;
            let w = j + k + l + m;
            below("alpha", alpha, w)?;
            glue(&[Cylinder { width: w, height: p }], |_, c| {
                let t = shifted(c, alpha, w);
                let col = if t < j {
                    t
                } else if t < j + m {
                    j + k + l + (t - j)
                } else if t < j + m + l {
                    j + k + (t - j - m)
                } else {
                    j + (t - j - m - l)
                };
                (0, col)
            })
        }
        H11Params::B {
            p,
            q,
            k,
            l,
            m,
            alpha,
            beta,
        } => {
            positive(&[p, q, k, l, m])?;
            let w = k + l + m;
            below("alpha", alpha, w)?;
            below("beta", beta, m)?;
            let cyls = [
                Cylinder { width: w, height: p },
                Cylinder { width: m, height: q },
            ];
            glue(&cyls, |cyl, c| {
                if cyl == 0 {
                    let t = shifted(c, alpha, w);
                    if t < m {
                        (1, t)
                    } else if t < m + k {
                        (0, m + l + (t - m))
                    } else {
                        (0, m + (t - m - k))
                    }
                } else {
                    (0, shifted(c, beta, m))
                }
            })
        }
        H11Params::C {
            p,
            q,
            k,
            l,
            m,
            alpha,
            beta,
        } => {
            positive(&[p, q, k, l, m])?;
            below("alpha", alpha, k + l)?;
            below("beta", beta, l + m)?;
            let cyls = [
                Cylinder { width: k + l, height: p },
                Cylinder { width: l + m, height: q },
            ];
            glue(&cyls, |cyl, c| {
                if cyl == 0 {
                    let t = shifted(c, alpha, k + l);
                    if t < l {
                        (1, m + t)
                    } else {
                        (0, t)
                    }
                } else {
                    let t = shifted(c, beta, l + m);
                    if t < m {
                        (1, t)
                    } else {
                        (0, t - m)
                    }
                }
            })
        }
        H11Params::D {
            p,
            q,
            r,
            k,
            l,
            alpha,
            beta,
            gamma,
        } => {
            positive(&[p, q, r, k, l])?;
            below("alpha", alpha, k)?;
            below("beta", beta, k + l)?;
            below("gamma", gamma, l)?;
            let cyls = [
                Cylinder { width: k, height: p },
                Cylinder { width: k + l, height: q },
                Cylinder { width: l, height: r },
            ];
            glue(&cyls, |cyl, c| match cyl {
                0 => (1, l + shifted(c, alpha, k)),
                1 => {
                    let t = shifted(c, beta, k + l);
                    if t < l {
                        (2, t)
                    } else {
                        (0, t - l)
                    }
                }
                _ => (1, shifted(c, gamma, l)),
            })
        }
    }
}

/// `(a, b)` with `a·b = n`, `a, b ≥ 1`.
fn factorizations(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).filter(move |d| n.is_multiple_of(*d)).map(move |d| (d, n / d))
}

/// Compositions `(k, l, m)` of `w` into three positive parts.
fn triples(w: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..w).flat_map(move |k| (1..w - k).map(move |l| (k, l, w - k - l)))
}

/// All one-cylinder parameters with `n` squares. With `rotations_only`
/// the widths are restricted to one representative per cyclic rotation of
/// `(k, l, m)`, which gives the same surfaces.
pub fn h2_one_cylinder_params(n: usize, rotations_only: bool) -> Vec<H2Params> {
    let mut out = Vec::new();
    for (p, w) in factorizations(n) {
        for (k, l, m) in triples(w) {
            if rotations_only && !((k, l, m) <= (l, m, k) && (k, l, m) <= (m, k, l)) {
                continue;
            }
            out.extend((0..w).map(|alpha| H2Params::OneCylinder { k, l, m, p, alpha }));
        }
    }
    out
}

/// All two-cylinder parameters with `n` squares.
pub fn h2_two_cylinder_params(n: usize) -> Vec<H2Params> {
    let mut out = Vec::new();
    for k in 2..=n {
        for p in 1..=n / k {
            let rest = n - p * k;
            for l in 1..k {
                if rest == 0 || !rest.is_multiple_of(l) {
                    continue;
                }
                let q = rest / l;
                for alpha in 0..k {
                    for beta in 0..l {
                        out.push(H2Params::TwoCylinder {
                            p,
                            q,
                            k,
                            l,
                            alpha,
                            beta,
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn h2_params(n: usize) -> Vec<H2Params> {
    let mut out = h2_one_cylinder_params(n, true);
    out.extend(h2_two_cylinder_params(n));
    out
}

/// Every parameter of every type with `n` squares.
pub fn h11_params(n: usize) -> Vec<H11Params> {
    let mut out = Vec::new();
    // type A
    for (p, w) in factorizations(n) {
        for j in 1..w {
            for (k, l, m) in triples(w - j) {
                out.extend((0..w).map(|alpha| H11Params::A {
                    p,
                    j,
                    k,
                    l,
                    m,
                    alpha,
                }));
            }
        }
    }
    // types B and C share the ranges of (p, q, k, l, m)
    for p in 1..=n {
        for q in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    for m in 1..=n {
                        if p * (k + l + m) + q * m == n {
                            for alpha in 0..k + l + m {
                                for beta in 0..m {
                                    out.push(H11Params::B {
                                        p,
                                        q,
                                        k,
                                        l,
                                        m,
                                        alpha,
                                        beta,
                                    });
                                }
                            }
                        }
                        if p * (k + l) + q * (l + m) == n {
                            for alpha in 0..k + l {
                                for beta in 0..l + m {
                                    out.push(H11Params::C {
                                        p,
                                        q,
                                        k,
                                        l,
                                        m,
                                        alpha,
                                        beta,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // type D
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        if p * k + q * (k + l) + r * l != n {
                            continue;
                        }
                        for alpha in 0..k {
                            for beta in 0..k + l {
                                for gamma in 0..l {
                                    out.push(H11Params::D {
                                        p,
                                        q,
                                        r,
                                        k,
                                        l,
                                        alpha,
                                        beta,
                                        gamma,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn dedup_keys<P: Sync>(params: &[P], build: impl Fn(&P) -> Result<Origami> + Sync) -> Vec<CanonicalKey> {
    let mut keys: Vec<CanonicalKey> = params
        .par_iter()
        .map(|p| canonical_key(&build(p).expect("generated parameters are in range")))
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    keys
}

/// Distinct surfaces of `H(2)` with `n` squares, as sorted canonical keys.
pub fn h2_surfaces(n: usize) -> Vec<CanonicalKey> {
    dedup_keys(&h2_params(n), |p| build_h2(*p))
}

/// Distinct surfaces of `H(1,1)` with `n` squares, as sorted canonical keys.
pub fn h11_surfaces(n: usize) -> Vec<CanonicalKey> {
    dedup_keys(&h11_params(n), |p| build_h11(*p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> Stratum {
        s.parse().unwrap()
    }

    #[test]
    fn one_cylinder_example_with_spacer() {
        let o = one_cylinder(&h("2,1,1"), 8).unwrap();
        let expected = Permutation::from_cycles(8, &[&[2, 3], &[5, 7]]).unwrap();
        assert_eq!(o.tau(), &expected);
        assert_eq!(stratum(&o), h("2,1,1"));
    }

    #[test]
    fn one_cylinder_small() {
        let o = one_cylinder(&h("2"), 3).unwrap();
        assert_eq!(o.tau(), &Permutation::from_cycles(3, &[&[2, 3]]).unwrap());
        assert_eq!(stratum(&one_cylinder(&h("1,1"), 4).unwrap()), h("1,1"));
        assert_eq!(
            one_cylinder(&h("2"), 2),
            Err(Error::TooFewSquares { n: 2, min: 3 })
        );
    }

    #[test]
    fn split_square_sizes() {
        assert_eq!(split_square_nonvisibility(&h("2")).unwrap().n(), 6);
        assert_eq!(split_square_nonvisibility(&h("1,1")).unwrap().n(), 8);
        assert!(split_square_nonvisibility(&h("-")).is_err());
    }

    #[test]
    fn smallest_parametrized_surfaces() {
        let o = build_h2(H2Params::OneCylinder {
            k: 1,
            l: 1,
            m: 1,
            p: 1,
            alpha: 0,
        })
        .unwrap();
        assert_eq!((o.n(), stratum(&o)), (3, h("2")));
        let o = build_h11(H11Params::A {
            p: 1,
            j: 1,
            k: 1,
            l: 1,
            m: 1,
            alpha: 0,
        })
        .unwrap();
        assert_eq!((o.n(), stratum(&o)), (4, h("1,1")));
    }

    #[test]
    fn ranges_are_checked() {
        let bad = H2Params::TwoCylinder {
            p: 1,
            q: 1,
            k: 1,
            l: 1,
            alpha: 0,
            beta: 0,
        };
        assert!(matches!(build_h2(bad), Err(Error::BadParameters(_))));
        let bad = H11Params::D {
            p: 1,
            q: 1,
            r: 1,
            k: 2,
            l: 1,
            alpha: 2,
            beta: 0,
            gamma: 0,
        };
        assert!(matches!(build_h11(bad), Err(Error::BadParameters(_))));
    }

    #[test]
    fn two_cylinder_surfaces_with_four_squares() {
        let params = h2_two_cylinder_params(4);
        assert_eq!(params.len(), 5);
        assert_eq!(dedup_keys(&params, |p| build_h2(*p)).len(), 5);
    }
}
