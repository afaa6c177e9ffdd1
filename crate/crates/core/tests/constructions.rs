mod common;

use sts_core::canonical::CanonicalKey;
use sts_core::constructions::*;
use sts_core::enumerate::{census_stratum, CensusOptions};
use sts_core::formulas::two_cyl_count_brute;
use sts_core::holonomy::*;
use sts_core::origami::Origami;
use sts_core::perm::partitions;
use sts_core::topology::*;

/// Every stratum with `Σα ≤ max_sum`.
fn strata(max_sum: usize) -> Vec<Stratum> {
    (1..=max_sum / 2)
        .flat_map(|half| partitions(2 * half))
        .map(|p| Stratum::new(p).unwrap())
        .collect()
}

/// Horizontal cylinders: rows (σ-cycles) whose bottom edge meets a cone
/// point, one per cylinder.
fn horizontal_cylinders(o: &Origami) -> usize {
    let corners = singular_corners(o);
    o.sigma()
        .cycles()
        .iter()
        .filter(|row| row.iter().any(|&i| corners[i]))
        .count()
}

fn census_slice(n: usize, alpha: &Stratum) -> Vec<CanonicalKey> {
    census_stratum(n, alpha, &CensusOptions::default())
        .unwrap()
        .into_iter()
        .map(|r| r.key)
        .collect()
}

#[test]
fn one_cylinder_lands_in_every_small_stratum() {
    for alpha in strata(8) {
        let min = alpha.min_squares();
        let max = alpha.alpha().iter().sum::<usize>() + alpha.s() + 4;
        for n in min..=max {
            let o = one_cylinder(&alpha, n).unwrap();
            assert_eq!(stratum(&o), alpha, "n = {n}");
            assert_eq!(o.sigma().cycles().len(), 1);
        }
        assert!(one_cylinder(&alpha, min - 1).is_err());
    }
}

#[test]
fn split_square_lands_in_every_small_stratum() {
    for alpha in strata(8) {
        let o = split_square_nonvisibility(&alpha).unwrap();
        assert_eq!(stratum(&o), alpha);
        assert_eq!(o.n(), 2 * alpha.min_squares());
        assert!(is_reduced(&o), "{alpha}");
    }
}

#[test]
fn split_square_is_not_visibility() {
    for alpha in strata(4) {
        let o = split_square_nonvisibility(&alpha).unwrap();
        let m = alpha.min_squares() as i64;
        let v = |a, b| HolonomyVector::new(a, b).unwrap();
        assert!(is_reduced(&o));
        assert!(!is_visibility(&o).unwrap(), "{alpha}");
        assert!(hol_contains(&o, v(1, 0)).unwrap());
        assert!(hol_contains(&o, v(0, 1)).unwrap());
        assert!(!hol_contains(&o, v(m, 1)).unwrap(), "{alpha}");
        assert!(!common::Tracer::new(&o).contains(m, 1));
    }
}

#[test]
fn parametrized_h2_matches_census() {
    let alpha: Stratum = "2".parse().unwrap();
    for n in 2..=8 {
        assert_eq!(h2_surfaces(n), census_slice(n, &alpha), "n = {n}");
    }
}

#[test]
fn parametrized_h11_matches_census() {
    let alpha: Stratum = "1,1".parse().unwrap();
    for n in 3..=8 {
        assert_eq!(h11_surfaces(n), census_slice(n, &alpha), "n = {n}");
    }
}

#[test]
fn cylinder_counts_follow_the_variant() {
    for n in 3..=12 {
        for p in h2_params(n) {
            let o = build_h2(p).unwrap();
            assert_eq!(o.n(), p.squares());
            assert_eq!(stratum(&o), "2".parse().unwrap());
            assert_eq!(horizontal_cylinders(&o), p.cylinders(), "{p:?}");
        }
    }
    for n in 4..=10 {
        for p in h11_params(n) {
            let o = build_h11(p).unwrap();
            assert_eq!(o.n(), p.squares());
            assert_eq!(stratum(&o), "1,1".parse().unwrap(), "{p:?}");
            let expected = match p {
                H11Params::A { .. } => 1,
                H11Params::B { .. } | H11Params::C { .. } => 2,
                H11Params::D { .. } => 3,
            };
            assert_eq!(horizontal_cylinders(&o), expected, "{p:?}");
        }
    }
}

#[test]
fn two_cylinder_sweep_counts() {
    for n in 3..=40 {
        assert_eq!(h2_two_cylinder_params(n).len() as u64, two_cyl_count_brute(n as u64));
    }
}

#[test]
fn one_cylinder_shears() {
    // for fixed widths the shears give r/3 surfaces when k = l = m and r
    // otherwise
    for r in 3..=12 {
        for p in 1..=2 {
            for k in 1..r {
                for l in 1..r - k {
                    let m = r - k - l;
                    let mut keys: Vec<CanonicalKey> = (0..r)
                        .map(|alpha| {
                            let o = build_h2(H2Params::OneCylinder { k, l, m, p, alpha }).unwrap();
                            sts_core::canonical::canonical_key(&o)
                        })
                        .collect();
                    keys.sort();
                    keys.dedup();
                    let expected = if k == l && l == m { r / 3 } else { r };
                    assert_eq!(keys.len(), expected, "({k},{l},{m}) p = {p}");
                }
            }
        }
    }
}

#[test]
fn three_cylinder_h11_with_equal_outer_heights_has_index_above_one() {
    // absolute periods of the three-cylinder diagram with p = r span a
    // proper sublattice, since gcd(p + q, q + r) = p + q > 1
    for n in 4..=12 {
        for prm in h11_params(n) {
            if let H11Params::D { p, q, r, .. } = prm {
                let o = build_h11(prm).unwrap();
                let index = period_lattice(&o).index;
                if p == r {
                    assert!(index > 1, "{prm:?}");
                }
                if index == 1 {
                    assert_eq!(common::gcd((p + q) as i64, (q + r) as i64), 1, "{prm:?}");
                }
            }
        }
    }
}
