mod common;

use common::*;
use sts_core::classify::classify;
use sts_core::sl2z::*;
use sts_core::topology::*;

#[test]
fn six_square_h11_surface() {
    let s = six_square_h11();
    assert_eq!(s.commutator().cycle_type(), vec![2, 2, 1, 1]);
    let c = classify(&s).unwrap();
    assert_eq!(c.stratum, "1,1".parse().unwrap());
    assert_eq!(c.genus(), 2);
    assert!(!c.flags.holonomy);
}

#[test]
fn ew_is_characteristic() {
    let s = ew();
    let c = classify(&s).unwrap();
    assert_eq!(c.stratum, "1,1,1,1".parse().unwrap());
    assert_eq!(c.flags.to_string(), "RNHVSCU");
    assert_eq!(c.orbit_size, Some(1));
    assert!(is_characteristic(&s) && is_characteristic_nielsen(&s));
    assert_eq!(monodromy_order(&s, 100).unwrap(), 8);
}

#[test]
fn ornithorynque_is_symmetry_but_not_holonomy() {
    let s = ornithorynque();
    let c = classify(&s).unwrap();
    assert_eq!(c.stratum, "2,2,2".parse().unwrap());
    assert!(c.flags.symmetry && c.flags.visibility && c.flags.reduced);
    assert!(!c.flags.holonomy && !c.flags.normal && !c.flags.characteristic);
    assert!(is_symmetry_torus(&s));
    assert!(!is_characteristic(&s) && !is_characteristic_nielsen(&s));
}

#[test]
fn swiss_cross_is_only_visibility() {
    let c = classify(&swiss_cross()).unwrap();
    assert_eq!(c.stratum, "2".parse().unwrap());
    assert!(c.flags.visibility);
    assert!(!c.flags.holonomy && !c.flags.symmetry && !c.flags.characteristic);
}

#[test]
fn four_square_holonomy_torus() {
    let s = four_square();
    let c = classify(&s).unwrap();
    assert!(c.flags.holonomy && !c.flags.symmetry && !c.flags.characteristic);
    assert_eq!(veech_index(&s).unwrap(), 6);
    assert_ne!(
        sts_core::canonical::canonical_key(&act_t(&s)),
        sts_core::canonical::canonical_key(&s)
    );
}

#[test]
fn implications_hold_for_named_surfaces() {
    for s in [six_square_h11(), ew(), ornithorynque(), swiss_cross(), four_square(), l_shape()] {
        assert!(classify(&s).unwrap().flags.implications_hold(), "{s}");
    }
}
