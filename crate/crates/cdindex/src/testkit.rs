//! Shared poset fixtures for unit tests.

use crate::poset::{Poset, PosetSpec};
use crate::rat::int;

/// Face poset of the one-gon: 0̂ < v < e < c with ζ̄(v,e) = 2.
pub fn one_gon() -> Poset {
    PosetSpec {
        elements: vec![
            ("0".into(), 0),
            ("v".into(), 1),
            ("e".into(), 2),
            ("c".into(), 3),
        ],
        relations: vec![
            ("0".into(), "v".into()),
            ("v".into(), "e".into()),
            ("e".into(), "c".into()),
        ],
        bottom: Some("0".into()),
        top: Some("c".into()),
        zeta: vec![("v".into(), "e".into(), int(2))],
    }
    .build()
    .unwrap()
}

/// Face poset of the 2-gon: two vertices joined by two parallel edges, also
/// known as the rank-3 butterfly poset.
pub fn two_gon() -> Poset {
    PosetSpec {
        elements: vec![
            ("0".into(), 0),
            ("v1".into(), 1),
            ("v2".into(), 1),
            ("e1".into(), 2),
            ("e2".into(), 2),
            ("1".into(), 3),
        ],
        relations: vec![
            ("0".into(), "v1".into()),
            ("0".into(), "v2".into()),
            ("v1".into(), "e1".into()),
            ("v1".into(), "e2".into()),
            ("v2".into(), "e1".into()),
            ("v2".into(), "e2".into()),
            ("e1".into(), "1".into()),
            ("e2".into(), "1".into()),
        ],
        bottom: Some("0".into()),
        top: Some("1".into()),
        zeta: Vec::new(),
    }
    .build()
    .unwrap()
}

/// Boolean lattice B_k as the poset of subsets of {1..k}. The empty set is
/// named `e`; every other subset lists its digits.
pub fn boolean(k: u32) -> Poset {
    let name = |mask: u32| -> String {
        if mask == 0 {
            "e".to_string()
        } else {
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| char::from_digit(i + 1, 10).unwrap())
                .collect()
        }
    };
    let mut spec = PosetSpec {
        bottom: Some(name(0)),
        top: Some(name((1 << k) - 1)),
        ..Default::default()
    };
    for mask in 0u32..1 << k {
        spec.elements.push((name(mask), mask.count_ones() as i64));
        for i in 0..k {
            if mask >> i & 1 == 0 {
                spec.relations.push((name(mask), name(mask | 1 << i)));
            }
        }
    }
    spec.build().unwrap()
}
