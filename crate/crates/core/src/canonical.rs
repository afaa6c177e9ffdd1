//! Canonical forms of origamis up to simultaneous relabeling of squares.
//!
//! For every base square `b` the squares are renumbered in breadth-first
//! discovery order starting from `b`, exploring the σ-neighbor before the
//! τ-neighbor of each dequeued square. Each base yields an encoding
//! `(n, σ images, τ images)`; the canonical key is the lexicographically
//! least of the `n` encodings. A relabeling of the surface permutes the
//! bases without changing the set of encodings, so the minimum is an
//! invariant, and it determines the pair up to relabeling.

use std::cmp::Ordering;
use std::fmt;

use crate::origami::{connected_raw, Origami};
use crate::perm::Permutation;

/// Flat encoding `[n, σ'(1..n), τ'(1..n)]` (1-based) of the canonical
/// relabeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u16]>);

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// 1-based σ images of the canonical representative.
    pub fn sigma_images(&self) -> &[u16] {
        &self.0[1..=self.n()]
    }

    /// 1-based τ images of the canonical representative.
    pub fn tau_images(&self) -> &[u16] {
        &self.0[self.n() + 1..]
    }

    /// The canonical representative itself.
    pub fn origami(&self) -> Origami {
        let conv = |s: &[u16]| Permutation::from_zero_based(s.iter().map(|&x| x as u32 - 1).collect());
        Origami::new_unchecked(conv(self.sigma_images()), conv(self.tau_images()))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({:?})", &self.0[..])
    }
}

/// Canonical key of a (connected) origami.
pub fn canonical_key(o: &Origami) -> CanonicalKey {
    canonical_key_raw(o.sigma().raw(), o.tau().raw())
}

/// The canonical representative of `o`'s relabeling class.
pub fn canonical_form(o: &Origami) -> Origami {
    canonical_key(o).origami()
}

/// Key for a raw 0-based pair, or `None` when the pair is disconnected.
pub fn try_canonical_key_raw(sigma: &[u32], tau: &[u32]) -> Option<CanonicalKey> {
    if sigma.len() != tau.len() || sigma.is_empty() || !connected_raw(sigma, tau) {
        return None;
    }
    Some(canonical_key_raw(sigma, tau))
}

/// Reusable scratch space for repeated canonicalization; it resizes itself
/// when the square count changes.
pub(crate) struct Canonicalizer {
    label: Vec<u32>,
    order: Vec<u32>,
    sig: Vec<u32>,
    tau: Vec<u32>,
    best_sig: Vec<u32>,
    best_tau: Vec<u32>,
}

const UNSEEN: u32 = u32::MAX;

impl Canonicalizer {
    pub(crate) fn new(n: usize) -> Self {
        Canonicalizer {
            label: vec![UNSEEN; n],
            order: Vec::with_capacity(n),
            sig: vec![0; n],
            tau: vec![0; n],
            best_sig: vec![0; n],
            best_tau: vec![0; n],
        }
    }

    /// Relabels from `base`. With `compare` set, stops as soon as the σ part
    /// exceeds the current best and returns `Greater`; otherwise returns the
    /// ordering of the full encoding against the best.
    fn relabel(&mut self, sigma: &[u32], tau: &[u32], base: usize, compare: bool) -> Ordering {
        let n = sigma.len();
        self.label.iter_mut().for_each(|l| *l = UNSEEN);
        self.order.clear();
        self.label[base] = 0;
        self.order.push(base as u32);
        let mut state = if compare { Ordering::Equal } else { Ordering::Less };
        for head in 0..n {
            // connectivity guarantees order.len() > head
            let x = self.order[head] as usize;
            let s = sigma[x] as usize;
            if self.label[s] == UNSEEN {
                self.label[s] = self.order.len() as u32;
                self.order.push(s as u32);
            }
            let t = tau[x] as usize;
            if self.label[t] == UNSEEN {
                self.label[t] = self.order.len() as u32;
                self.order.push(t as u32);
            }
            self.sig[head] = self.label[s];
            self.tau[head] = self.label[t];
            if state == Ordering::Equal {
                match self.sig[head].cmp(&self.best_sig[head]) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => state = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
        }
        if state == Ordering::Equal {
            state = self.tau.cmp(&self.best_tau);
        }
        state
    }

    pub(crate) fn key(&mut self, sigma: &[u32], tau: &[u32]) -> CanonicalKey {
        let n = sigma.len();
        if self.label.len() != n {
            *self = Canonicalizer::new(n);
        }
        self.relabel(sigma, tau, 0, false);
        std::mem::swap(&mut self.sig, &mut self.best_sig);
        std::mem::swap(&mut self.tau, &mut self.best_tau);
        for base in 1..n {
            if self.relabel(sigma, tau, base, true) == Ordering::Less {
                std::mem::swap(&mut self.sig, &mut self.best_sig);
                std::mem::swap(&mut self.tau, &mut self.best_tau);
            }
        }
        let mut enc = Vec::with_capacity(2 * n + 1);
        enc.push(n as u16);
        enc.extend(self.best_sig.iter().map(|&x| x as u16 + 1));
        enc.extend(self.best_tau.iter().map(|&x| x as u16 + 1));
        CanonicalKey(enc.into_boxed_slice())
    }
}

pub(crate) fn canonical_key_raw(sigma: &[u32], tau: &[u32]) -> CanonicalKey {
    assert!(sigma.len() < u16::MAX as usize, "too many squares for a canonical key");
    Canonicalizer::new(sigma.len()).key(sigma, tau)
}
