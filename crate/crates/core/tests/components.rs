//! Products, kernels and oracles on whole components.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weitzenbock::generators::{index_pairs, Decomposer};
use weitzenbock::rational::{ratio, Rational};
use weitzenbock::tableau::{kernel_dimension_oracle, two_row_partitions};
use weitzenbock::{enumerate_products, exp_action, expand, is_constant, kernel_basis, kostka, MultiDegree, Polynomial, ProductTerm};

/// All `(p, q)` with entries bounded by `|n|`, filtered by multidegree.
fn brute_products(n: &MultiDegree) -> BTreeSet<ProductTerm> {
    let d = n.d();
    let pairs = index_pairs(d).len();
    let bound = n.total();
    let len = d + pairs;
    let mut out = BTreeSet::new();
    let mut v = vec![0u32; len];
    loop {
        let t = ProductTerm { p: v[..d].to_vec(), q: v[d..].to_vec() };
        if t.multidegree() == *n {
            out.insert(t);
        }
        let mut k = 0;
        while k < len && v[k] == bound {
            v[k] = 0;
            k += 1;
        }
        if k == len {
            break;
        }
        v[k] += 1;
    }
    out
}

#[test]
fn enumeration_is_complete_and_duplicate_free() {
    for d in 1..=3 {
        for n in MultiDegree::up_to(d, 4, None) {
            let listed = enumerate_products(&n);
            let set: BTreeSet<ProductTerm> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates for {n}");
            assert_eq!(set, brute_products(&n), "n = {n}");
        }
    }
    assert_eq!(enumerate_products(&MultiDegree::new(vec![1, 1, 2])).len(), 5);
}

#[test]
fn every_product_is_a_constant() {
    for n in MultiDegree::up_to(4, 4, None) {
        for t in enumerate_products(&n) {
            let f = expand(&t);
            assert!(is_constant(&f), "{t}");
            assert_eq!(f.multidegree(), Some(n.clone()));
        }
    }
}

#[test]
fn kernel_matches_kostka_oracle() {
    for d in 1..=3 {
        for n in MultiDegree::up_to(d, 5, None) {
            assert_eq!(kernel_basis(&n).dimension() as u64, kernel_dimension_oracle(&n), "n = {n}");
        }
    }
}

#[test]
fn kernel_vectors_are_fixed_by_the_unipotent_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in MultiDegree::up_to(3, 4, None) {
        for f in kernel_basis(&n).vectors {
            let t = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
            assert_eq!(exp_action(&f, &t), f);
        }
    }
}

#[test]
fn decomposition_round_trips_random_constants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in MultiDegree::up_to(3, 5, None) {
        let basis = kernel_basis(&n).vectors;
        let dec = Decomposer::new(&n);
        for _ in 0..10 {
            let mut f = Polynomial::zero(n.d());
            for v in &basis {
                let c: Rational = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
                f = &f + &v.scale(&c);
            }
            let cert = dec.decompose(&f).unwrap();
            assert_eq!(cert.expand(), f);
        }
    }
}

proptest! {
    #[test]
    fn kostka_is_symmetric_in_content(n in prop::collection::vec(0u32..=3, 1..=4), seed in any::<u64>()) {
        let content = MultiDegree::new(n.clone());
        let mut permuted = n.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..permuted.len()).rev() {
            permuted.swap(i, rng.gen_range(0..=i));
        }
        let permuted = MultiDegree::new(permuted);
        for shape in two_row_partitions(content.total()) {
            prop_assert_eq!(kostka(shape, &content).unwrap(), kostka(shape, &permuted).unwrap());
        }
    }
}
