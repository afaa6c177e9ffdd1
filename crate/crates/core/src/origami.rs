//! Origamis: pairs of permutations describing how unit squares are glued.
//!
//! `sigma(i)` is the square to the right of square `i` and `tau(i)` the
//! square above it. The pair must generate a transitive group, otherwise the
//! surface is disconnected.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A connected square-tiled surface given by its right-neighbor map `sigma`
/// and up-neighbor map `tau`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Origami {
    sigma: Permutation,
    tau: Permutation,
}

impl Origami {
    /// Validates sizes and connectivity.
    pub fn new(sigma: Permutation, tau: Permutation) -> Result<Self> {
        if sigma.len() != tau.len() {
            return Err(Error::SizeMismatch {
                left: sigma.len(),
                right: tau.len(),
            });
        }
        if !is_connected(&sigma, &tau) {
            return Err(Error::Disconnected);
        }
        Ok(Origami { sigma, tau })
    }

    /// Skips the connectivity check. Used where connectivity is preserved
    /// by construction (SL(2,Z) rewritings, relabelings).
    pub(crate) fn new_unchecked(sigma: Permutation, tau: Permutation) -> Self {
        debug_assert_eq!(sigma.len(), tau.len());
        Origami { sigma, tau }
    }

    /// Convenience constructor from 1-based cycle lists.
    pub fn from_cycles(n: usize, sigma: &[&[usize]], tau: &[&[usize]]) -> Result<Self> {
        Origami::new(
            Permutation::from_cycles(n, sigma)?,
            Permutation::from_cycles(n, tau)?,
        )
    }

    /// The one-square torus.
    pub fn torus() -> Self {
        Origami::new_unchecked(Permutation::identity(1), Permutation::identity(1))
    }

    /// Parses `sigma|tau`, each side in cycle or one-line notation.
    pub fn parse(text: &str) -> Result<Self> {
        let (s, t) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected `sigma|tau`, got `{text}`")))?;
        let (s, t) = (s.trim(), t.trim());
        // one-line input fixes n; cycle notation borrows n from the other side
        let n = [s, t]
            .iter()
            .filter(|x| !x.starts_with('('))
            .map(|x| x.split(',').count())
            .next();
        let n = match n {
            Some(n) => n,
            None => {
                let max_label = |x: &str| {
                    x.split(|c: char| !c.is_ascii_digit())
                        .filter_map(|d| d.parse::<usize>().ok())
                        .max()
                        .unwrap_or(1)
                };
                max_label(s).max(max_label(t))
            }
        };
        Origami::new(Permutation::parse(s, Some(n))?, Permutation::parse(t, Some(n))?)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    #[inline]
    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// The commutator `c = στσ⁻¹τ⁻¹` (right factor first).
    ///
    /// `c(i)` is reached from square `i` by stepping down, left, up and
    /// right, i.e. by circling the bottom-left corner of `i` once. The cycle
    /// of `c` through `i` is therefore the vertex at the bottom-left corner
    /// of square `i`, and its length `k` gives the cone angle `2πk`.
    pub fn commutator(&self) -> Permutation {
        let si = self.sigma.inverse();
        let ti = self.tau.inverse();
        let n = self.n();
        let images = (0..n)
            .map(|i| self.sigma.apply(self.tau.apply(si.apply(ti.apply(i)))) as u32)
            .collect();
        Permutation::from_zero_based(images)
    }

    /// Simultaneous relabeling of both permutations along `g`: square `i`
    /// becomes square `g(i)`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Self> {
        Ok(Origami::new_unchecked(
            self.sigma.conjugate_by(g)?,
            self.tau.conjugate_by(g)?,
        ))
    }
}

impl fmt::Display for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.sigma.to_one_line(), self.tau.to_one_line())
    }
}

impl fmt::Debug for Origami {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Origami(n={}, sigma={}, tau={})", self.n(), self.sigma, self.tau)
    }
}

/// True iff `⟨σ, τ⟩` has a single orbit on the squares.
pub fn is_connected(sigma: &Permutation, tau: &Permutation) -> bool {
    if sigma.len() != tau.len() {
        return false;
    }
    connected_raw(sigma.raw(), tau.raw())
}

/// Graph search over σ and τ edges; following forward edges suffices because
/// every orbit of a permutation is a cycle.
pub(crate) fn connected_raw(sigma: &[u32], tau: &[u32]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    seen[0] = true;
    queue.push_back(0usize);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for y in [sigma[x] as usize, tau[x] as usize] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six_square_h11() -> Origami {
        Origami::from_cycles(6, &[&[1, 2, 3, 4], &[5, 6]], &[&[1, 5], &[2, 6], &[3, 4]]).unwrap()
    }

    #[test]
    fn six_square_commutator_has_two_double_vertices() {
        assert_eq!(six_square_h11().commutator().cycle_type(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn torus_commutator_is_identity() {
        assert!(Origami::torus().commutator().is_identity());
    }

    #[test]
    fn l_shape_commutator_is_three_cycle() {
        let o = Origami::from_cycles(3, &[&[1, 2]], &[&[1, 3]]).unwrap();
        assert_eq!(o.commutator().cycle_type(), vec![3]);
    }

    #[test]
    fn connectivity() {
        let o = six_square_h11();
        assert!(is_connected(o.sigma(), o.tau()));
        let id = Permutation::identity(2);
        assert!(!is_connected(&id, &id));
        let t = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        assert!(is_connected(&t, &id));
        assert!(matches!(Origami::new(id.clone(), id), Err(Error::Disconnected)));
    }

    #[test]
    fn parse_round_trip() {
        let o = six_square_h11();
        assert_eq!(Origami::parse(&o.to_string()).unwrap(), o);
        assert_eq!(Origami::parse("(1,2,3,4)(5,6)|(1,5)(2,6)(3,4)").unwrap(), o);
        assert_eq!(Origami::parse("(1,2,3,4)(5,6)|5,6,4,3,1,2").unwrap(), o);
        assert!(Origami::parse("1,2").is_err());
        assert!(Origami::parse("1,1|1,2").is_err());
    }

    #[test]
    fn conjugation_preserves_commutator_type() {
        let o = six_square_h11();
        let g = Permutation::from_cycles(6, &[&[1, 6, 2], &[3, 5]]).unwrap();
        let c = o.conjugate(&g).unwrap();
        assert_eq!(c.commutator().cycle_type(), o.commutator().cycle_type());
    }
}
