//! Stratum, genus, lattice of periods and the algebraic classifications.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::origami::Origami;

/// Orders `α = (α₁, …, α_s)` of the cone points, sorted in decreasing
/// order. The empty stratum is the genus-one case.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Stratum {
    alpha: Vec<usize>,
}

impl Stratum {
    pub fn new(mut alpha: Vec<usize>) -> Result<Self> {
        if alpha.contains(&0) {
            return Err(Error::InvalidStratum(format!(
                "zero orders must be positive, got {alpha:?}"
            )));
        }
        if alpha.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::InvalidStratum(format!(
                "orders must sum to an even number 2g-2, got {alpha:?}"
            )));
        }
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Stratum { alpha })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// Number of cone points.
    pub fn s(&self) -> usize {
        self.alpha.len()
    }

    pub fn genus(&self) -> usize {
        self.alpha.iter().sum::<usize>() / 2 + 1
    }

    /// `2g − 2 + s = Σ(αᵢ + 1)`, the fewest squares any surface in the
    /// stratum can have.
    pub fn min_squares(&self) -> usize {
        self.alpha.iter().map(|a| a + 1).sum()
    }

    /// Census-file form: comma-separated orders, or `-` in genus one.
    pub fn to_field(&self) -> String {
        if self.alpha.is_empty() {
            "-".to_string()
        } else {
            self.alpha
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl FromStr for Stratum {
    type Err = Error;

    /// Accepts `2,1,1`, `(2,1,1)`, `H(2,1,1)`, and `-` or the empty string
    /// for genus one.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('H').unwrap_or(s);
        let s = s.trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" {
            return Ok(Stratum::default());
        }
        let alpha = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidStratum(format!("bad order `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Stratum::new(alpha)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self
            .alpha
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "H({inner})")
    }
}

impl fmt::Debug for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{k − 1 : k a commutator cycle length > 1}`, sorted decreasingly.
pub fn stratum(o: &Origami) -> Stratum {
    let alpha = o
        .commutator()
        .cycle_type()
        .into_iter()
        .filter(|&k| k > 1)
        .map(|k| k - 1)
        .collect();
    Stratum { alpha }
}

pub fn genus(o: &Origami) -> usize {
    stratum(o).genus()
}

/// Lattice `{x·(a, b) + y·(0, d)}` in Hermite normal form: `a, d > 0` and
/// `0 ≤ b < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PeriodLattice {
    pub basis: [[i64; 2]; 2],
    pub index: u64,
}

impl PeriodLattice {
    /// Hermite normal form of the lattice spanned by `vectors`. Returns
    /// `None` if they do not span a rank-two lattice.
    pub fn from_generators(vectors: impl IntoIterator<Item = (i64, i64)>) -> Option<Self> {
        let mut pivot: Option<(i64, i64)> = None;
        let mut d: i64 = 0;
        for (x, y) in vectors {
            if x == 0 {
                d = gcd(d, y);
                continue;
            }
            match pivot {
                None => pivot = Some((x, y)),
                Some((px, py)) => {
                    let (g, u, w) = ext_gcd(px, x);
                    // unimodular change of basis [[u, w], [x/g, -px/g]]
                    pivot = Some((g, u * py + w * y));
                    let rest = (x / g) * py - (px / g) * y;
                    d = gcd(d, rest);
                }
            }
        }
        let (mut a, mut b) = pivot?;
        if d == 0 {
            return None;
        }
        if a < 0 {
            a = -a;
            b = -b;
        }
        let d = d.abs();
        let b = b.rem_euclid(d);
        Some(PeriodLattice {
            basis: [[a, b], [0, d]],
            index: (a * d) as u64,
        })
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        let [[a, b], [_, d]] = self.basis;
        if v.0 % a != 0 {
            return false;
        }
        let x = v.0 / a;
        (v.1 - x * b) % d == 0
    }
}

/// Lattice of periods: the holonomies of closed paths in the square
/// adjacency graph, in Hermite normal form.
///
/// Squares get `Z²` potentials along a breadth-first spanning tree where a
/// σ-step adds `(1,0)` and a τ-step adds `(0,1)`; every edge `i → j` with
/// label `e` then contributes the cycle vector `pot(i) + e − pot(j)`.
pub fn period_lattice(o: &Origami) -> PeriodLattice {
    let pot = potentials(o);
    PeriodLattice::from_generators(absolute_cycles(o, &pot))
        .expect("a connected origami has rank-two periods")
}

/// Position of the bottom-left corner of every square along a
/// breadth-first spanning tree rooted at square 0.
fn potentials(o: &Origami) -> Vec<(i64, i64)> {
    let n = o.n();
    let (sigma, tau) = (o.sigma(), o.tau());
    let (si, ti) = (sigma.inverse(), tau.inverse());
    let mut pot: Vec<Option<(i64, i64)>> = vec![None; n];
    pot[0] = Some((0, 0));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let (px, py) = pot[x].unwrap();
        for (y, p) in [
            (sigma.apply(x), (px + 1, py)),
            (si.apply(x), (px - 1, py)),
            (tau.apply(x), (px, py + 1)),
            (ti.apply(x), (px, py - 1)),
        ] {
            if pot[y].is_none() {
                pot[y] = Some(p);
                queue.push_back(y);
            }
        }
    }
    pot.into_iter().map(|p| p.expect("origami is connected")).collect()
}

fn absolute_cycles<'a>(
    o: &'a Origami,
    pot: &'a [(i64, i64)],
) -> impl Iterator<Item = (i64, i64)> + 'a {
    (0..o.n()).flat_map(move |i| {
        let (px, py) = pot[i];
        let (sx, sy) = pot[o.sigma().apply(i)];
        let (tx, ty) = pot[o.tau().apply(i)];
        [(px + 1 - sx, py - sy), (px - tx, py + 1 - ty)]
    })
}

/// Lattice generated by the holonomies of saddle connections: the absolute
/// periods together with the displacements between cone points. Without
/// cone points it is the absolute lattice.
pub fn relative_period_lattice(o: &Origami) -> PeriodLattice {
    let pot = potentials(o);
    let c = o.commutator();
    let singular: Vec<usize> = (0..o.n()).filter(|&i| c.apply(i) != i).collect();
    let relative: Vec<(i64, i64)> = match singular.first() {
        Some(&b) => singular
            .iter()
            .map(|&j| (pot[j].0 - pot[b].0, pot[j].1 - pot[b].1))
            .collect(),
        None => Vec::new(),
    };
    PeriodLattice::from_generators(absolute_cycles(o, &pot).chain(relative))
        .expect("a connected origami has rank-two periods")
}

/// The lattice generated by holonomy vectors is all of `Z²`.
pub fn is_reduced(o: &Origami) -> bool {
    relative_period_lattice(o).index == 1
}

/// Reduced, and the monodromy action admits no block system with a number
/// of blocks strictly between 1 and n.
pub fn is_primitive(o: &Origami) -> bool {
    o.n() == 1 || (is_reduced(o) && is_group_primitive(o))
}

/// Pure permutation-group primitivity of `⟨σ, τ⟩`: for every `j ≠ 1` the
/// minimal block containing `{1, j}` must be everything.
pub fn is_group_primitive(o: &Origami) -> bool {
    let n = o.n();
    let gens = [o.sigma().raw(), o.tau().raw()];
    let mut parent: Vec<usize> = Vec::with_capacity(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for j in 1..n {
        parent.clear();
        parent.extend(0..n);
        union(&mut parent, 0, j);
        queue.clear();
        queue.push((0, j));
        while let Some((a, b)) = queue.pop() {
            for g in gens {
                let (ga, gb) = (g[a] as usize, g[b] as usize);
                if find(&mut parent, ga) != find(&mut parent, gb) {
                    union(&mut parent, ga, gb);
                    queue.push((ga, gb));
                }
            }
        }
        let root = find(&mut parent, 0);
        let block = (0..n).filter(|&x| find(&mut parent, x) == root).count();
        if block < n {
            return false;
        }
    }
    true
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Default cap on the number of group elements [`monodromy_order`] will
/// enumerate.
pub const DEFAULT_GROUP_CAP: usize = 10_000_000;

/// Order of the monodromy group `⟨σ, τ⟩` by closure, or
/// [`Error::GroupTooLarge`] once more than `cap` elements are found.
pub fn monodromy_order(o: &Origami, cap: usize) -> Result<usize> {
    closure_size(o, cap).ok_or(Error::GroupTooLarge { cap })
}

fn closure_size(o: &Origami, cap: usize) -> Option<usize> {
    let n = o.n();
    let gens = [o.sigma().raw(), o.tau().raw()];
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            // h ∘ g
            let next: Vec<u32> = g.iter().map(|&x| h[x as usize]).collect();
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

/// The cover is Galois: the monodromy group acts regularly, i.e. has order
/// exactly `n`. A transitive group has order at least `n`, so the closure
/// stops as soon as it finds `n + 1` elements.
pub fn is_normal(o: &Origami) -> bool {
    closure_size(o, o.n()).is_some_and(|order| order == o.n())
}

/// Every square corner is a cone point: the commutator has no fixed point.
/// The one-square torus counts, its single vertex being the marked point.
pub fn is_holonomy_torus(o: &Origami) -> bool {
    o.n() == 1 || o.commutator().fixed_points() == 0
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, u, v)` with `g = gcd(a, b) ≥ 0` and `u·a + v·b = g`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}
