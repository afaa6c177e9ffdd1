//! Permutations of the squares `{1, …, n}`.
//!
//! Labels are 1-based at every public boundary (parsing, display, one-line
//! images) and 0-based internally, where square `i` is stored at index
//! `i - 1`.
//!
//! # Composition convention
//!
//! [`Permutation::compose`] applies the **right factor first**:
//! `a.compose(&b)` is the map `i ↦ a(b(i))`. Every word in this crate
//! (commutators, the SL(2,Z) rewritings, Nielsen moves) is written with
//! this convention, so `στσ⁻¹τ⁻¹` means "apply τ⁻¹, then σ⁻¹, then τ,
//! then σ".

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1, …, n}` stored as 0-based one-line images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `n ≥ 1` points.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on at least one point");
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images, where
    /// `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::LabelOutOfRange { label: img, n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotBijective { label: img });
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation from 0-based images. Panics if `images` is not a
    /// bijection; meant for internal constructions that are correct by
    /// construction.
    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images
                .iter()
                .all(|&x| (x as usize) < seen.len() && !std::mem::replace(&mut seen[x as usize], true))
        });
        Permutation { images }
    }

    /// Builds a permutation of `{1, …, n}` from disjoint 1-based cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::LabelOutOfRange { label: x, n });
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::NotBijective { label: x });
                }
                let next = cycle[(pos + 1) % cycle.len()];
                if next == 0 || next > n {
                    return Err(Error::LabelOutOfRange { label: next, n });
                }
                images[x - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses either cycle notation `(1,2,3)(4,5)` or comma-separated
    /// one-line images `2,3,1,5,4`. Cycle notation needs `n`; when `n` is
    /// `None` the largest label mentioned is used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('(') {
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            for chunk in text.split('(').skip(1) {
                let body = chunk
                    .trim()
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced cycle in `{text}`")))?;
                let cycle = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad label `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            let max = cycles.iter().flatten().copied().max().unwrap_or(1);
            let n = n.unwrap_or(max);
            let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            Permutation::from_cycles(n, &refs)
        } else {
            let images = text
                .split(',')
                .map(|s| {
                    let s = s.trim();
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad label `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = n {
                if n != images.len() {
                    return Err(Error::SizeMismatch {
                        left: n,
                        right: images.len(),
                    });
                }
            }
            Permutation::from_images(&images)
        }
    }

    /// Number of points moved or fixed.
    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    /// Always `false`: permutations act on at least one point.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    /// 1-based one-line images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `i ↦ self(other(i))`: the right factor is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// `self^k` for any integer `k`, computed cycle by cycle.
    pub fn pow(&self, k: i64) -> Self {
        let n = self.len();
        let mut out = vec![0u32; n];
        let mut done = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &y) in cycle.iter().enumerate() {
                out[y as usize] = cycle[(pos + shift) % cycle.len()];
            }
        }
        Permutation { images: out }
    }

    /// `g · self · g⁻¹`: the relabeling of `self` along `g`, mapping
    /// `g(i) ↦ g(self(i))`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        if self.len() != g.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: g.len(),
            });
        }
        let mut out = vec![0u32; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Ok(Permutation { images: out })
    }

    /// Disjoint cycles as 0-based points, each starting at its least point,
    /// ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    /// Comma-separated 1-based one-line images, as used by the census file.
    pub fn to_one_line(&self) -> String {
        let mut s = String::with_capacity(self.len() * 3);
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&(x + 1).to_string());
        }
        s
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.len(), self)
    }
}

/// One representative permutation per cycle type of `S_n`: the cycles are
/// laid out consecutively `(1 … λ₁)(λ₁+1 … λ₁+λ₂)…` for each partition `λ`
/// of `n`, listed in reverse lexicographic order.
pub fn cycle_type_representatives(n: usize) -> Vec<Permutation> {
    partitions(n)
        .into_iter()
        .map(|parts| {
            let mut images = Vec::with_capacity(n);
            let mut start = 0u32;
            for p in parts {
                let p = p as u32;
                for k in 0..p {
                    images.push(start + (k + 1) % p);
                }
                start += p;
            }
            Permutation::from_zero_based(images)
        })
        .collect()
}

/// Partitions of `n` as non-increasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Visits every permutation of `{0, …, n-1}` in lexicographic order.
/// The callback receives 0-based images.
#[cfg(test)]
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    for first in 0..n as u32 {
        for_each_permutation_with_first(n, first, &mut f);
    }
}

/// Visits, in lexicographic order, every permutation of `{0, …, n-1}`
/// sending 0 to `first`.
pub(crate) fn for_each_permutation_with_first(n: usize, first: u32, mut f: impl FnMut(&[u32])) {
    let mut p: Vec<u32> = std::iter::once(first)
        .chain((0..n as u32).filter(|&x| x != first))
        .collect();
    loop {
        f(&p);
        let Some(i) = (1..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}
