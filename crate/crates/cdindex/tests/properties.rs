//! Cross-module properties on randomly generated posets and elements. The
//! per-module algebra laws live next to their modules; this file checks the
//! identities that tie the modules together.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use cdindex::flag::{
    ab_index, ab_index_from_flag_h, ab_index_via, cd_index, check_coalgebra_identity,
    check_h_symmetry, dehn_sommerville_witness, flag_h_vector, AbIndexMethod,
};
use cdindex::ops::{cartesian_product, dual, find_zippers, pyramid, stanley_product, zip_zipper};
use cdindex::poset::Poset;
use cdindex::qsym::{
    monomial_coproduct, monomial_product, qsym_of_poset, qsym_to_ab, Composition, QSymElement,
};
use cdindex::rat::{frac, int, Rat};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn raw_poset(seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_odd_zeta_poset(&mut rng, 4)
}

fn eulerian_poset(seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_eulerian_poset(&mut rng, 4)
}

fn small_eulerian_poset(seed: u64, max_span: i64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_eulerian_poset(&mut rng, max_span)
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn composition(max_parts: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1i64..=3, 0..=max_parts)
}

fn qsym_element(max_terms: usize) -> impl Strategy<Value = QSymElement> {
    prop::collection::vec((composition(3), small_rat()), 0..=max_terms).prop_map(|terms| {
        let mut out = QSymElement::zero();
        for (alpha, coeff) in terms {
            out.add_term(alpha, &coeff);
        }
        out
    })
}

fn eulerian_condition_holds_everywhere(p: &Poset) -> bool {
    let mobius = p.weighted_mobius();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if !p.leq(i, j) {
                continue;
            }
            let sign = if (p.rank(j) - p.rank(i)) % 2 == 0 {
                int(1)
            } else {
                int(-1)
            };
            if mobius.get(i, j) != sign * p.zeta_bar(i, j) {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ab_index_methods_agree(seed in any::<u64>()) {
        for p in [raw_poset(seed), eulerian_poset(seed)] {
            let chains = ab_index_via(&p, AbIndexMethod::Chains).unwrap();
            let recursion = ab_index_via(&p, AbIndexMethod::Recursion).unwrap();
            let mobius = ab_index_via(&p, AbIndexMethod::Mobius).unwrap();
            prop_assert_eq!(&chains, &recursion);
            prop_assert_eq!(&recursion, &mobius);
        }
    }

    #[test]
    fn eulerian_check_matches_the_mobius_definition(seed in any::<u64>()) {
        for p in [raw_poset(seed), eulerian_poset(seed)] {
            prop_assert_eq!(p.is_eulerian(), eulerian_condition_holds_everywhere(&p));
        }
    }

    #[test]
    fn completion_yields_cd_expressible_symmetric_posets(seed in any::<u64>()) {
        let p = eulerian_poset(seed);
        prop_assert!(p.is_eulerian());
        prop_assert!(cd_index(&p).is_ok());
        prop_assert!(check_h_symmetry(&p).unwrap());
        prop_assert_eq!(dehn_sommerville_witness(&p).unwrap(), None);
    }

    #[test]
    fn dual_reverses_the_ab_index(seed in any::<u64>()) {
        let p = raw_poset(seed);
        prop_assert_eq!(ab_index(&dual(&p).unwrap()).unwrap(), ab_index(&p).unwrap().star());
    }

    #[test]
    fn flag_h_vector_lists_the_ab_coefficients(seed in any::<u64>()) {
        let p = raw_poset(seed);
        let h = flag_h_vector(&p).unwrap();
        prop_assert_eq!(ab_index_from_flag_h(&h), ab_index(&p).unwrap());
    }

    #[test]
    fn coproduct_tracks_intervals(seed in any::<u64>()) {
        let p = raw_poset(seed);
        prop_assert!(check_coalgebra_identity(&p).unwrap());
    }

    #[test]
    fn stanley_product_multiplies_ab_indices(seed in any::<u64>()) {
        let p = raw_poset(seed);
        let q = raw_poset(seed.wrapping_add(1));
        let product = stanley_product(&p, &q).unwrap();
        prop_assert_eq!(
            ab_index(&product).unwrap(),
            &ab_index(&p).unwrap() * &ab_index(&q).unwrap()
        );
    }

    #[test]
    fn pyramid_agrees_with_its_product_poset(seed in any::<u64>()) {
        let p = raw_poset(seed);
        let (product, psi) = pyramid(&p).unwrap();
        prop_assert_eq!(ab_index(&product).unwrap(), psi);
    }

    #[test]
    fn products_of_eulerian_posets_are_eulerian(seed in any::<u64>()) {
        let p = small_eulerian_poset(seed, 3);
        let q = small_eulerian_poset(seed.wrapping_add(1), 3);
        prop_assert!(cartesian_product(&p, &q).unwrap().is_eulerian());
    }

    #[test]
    fn zipping_preserves_the_eulerian_condition(seed in any::<u64>()) {
        let p = cartesian_product(
            &small_eulerian_poset(seed, 3),
            &cdindex::complex::ngon_poset(2, 1).unwrap(),
        )
        .unwrap();
        prop_assert!(p.is_eulerian());
        for zipper in find_zippers(&p) {
            prop_assert!(zip_zipper(&p, &zipper).unwrap().is_eulerian());
        }
    }

    #[test]
    fn selecting_every_interior_rank_is_the_identity(seed in any::<u64>()) {
        let p = raw_poset(seed);
        let span = p.rank_span().unwrap();
        let all: BTreeSet<i64> = (1..span).collect();
        prop_assert!(p.rank_selection(&all).unwrap().semantic_eq(&p));
    }

    #[test]
    fn qsym_collapse_reproduces_the_ab_index(seed in any::<u64>()) {
        let p = raw_poset(seed);
        prop_assert_eq!(qsym_to_ab(&qsym_of_poset(&p).unwrap()), ab_index(&p).unwrap());
    }

    #[test]
    fn qsym_of_a_product_is_the_product_of_qsyms(seed in any::<u64>()) {
        let p = small_eulerian_poset(seed, 2);
        let q = small_eulerian_poset(seed.wrapping_add(1), 3);
        let product = cartesian_product(&p, &q).unwrap();
        prop_assert_eq!(
            qsym_of_poset(&product).unwrap(),
            monomial_product(&qsym_of_poset(&p).unwrap(), &qsym_of_poset(&q).unwrap())
        );
    }

    #[test]
    fn quasi_shuffle_product_is_commutative(x in qsym_element(3), y in qsym_element(3)) {
        prop_assert_eq!(monomial_product(&x, &y), monomial_product(&y, &x));
    }

    #[test]
    fn quasi_shuffle_product_is_associative(
        x in qsym_element(2),
        y in qsym_element(2),
        z in qsym_element(2),
    ) {
        prop_assert_eq!(
            monomial_product(&monomial_product(&x, &y), &z),
            monomial_product(&x, &monomial_product(&y, &z))
        );
    }

    #[test]
    fn deconcatenation_is_coassociative(x in qsym_element(3)) {
        let delta = monomial_coproduct(&x);
        let mut left: BTreeMap<(Composition, Composition, Composition), Rat> = BTreeMap::new();
        let mut right = left.clone();
        for ((u, v), coeff) in delta.terms() {
            for ((u1, u2), c) in monomial_coproduct(&QSymElement::monomial(u.clone(), int(1))).terms() {
                *left.entry((u1.clone(), u2.clone(), v.clone())).or_default() += coeff * c;
            }
            for ((v1, v2), c) in monomial_coproduct(&QSymElement::monomial(v.clone(), int(1))).terms() {
                *right.entry((u.clone(), v1.clone(), v2.clone())).or_default() += coeff * c;
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        prop_assert_eq!(left, right);
    }
}
