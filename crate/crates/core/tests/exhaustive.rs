use num_bigint::BigInt;
use uturn_core::charpoly::{sp_dimension, uasm_count_product};
use uturn_core::combinat::{staircase, Partition, StrictPartition};
use uturn_core::tableaux::{generate_ordinary, generate_shifted, generate_shifted_par};
use uturn_core::uasm::{brute_force_uasms, brute_force_uasms_par};

#[test]
fn tableaux_and_matrices_are_equinumerous() {
    for n in 1..=3 {
        for mu in StrictPartition::all_with(n, 4) {
            let st = generate_shifted(&mu, n).unwrap().len();
            let ua = brute_force_uasms(&mu, n).unwrap().len();
            assert_eq!(st, ua, "mu = {mu}");
        }
    }
}

#[test]
fn staircase_counts_match_the_product_formula() {
    for n in 1..=4 {
        let delta = staircase(n);
        let count = brute_force_uasms(&delta, n).unwrap().len();
        assert_eq!(BigInt::from(count), uasm_count_product(n).unwrap(), "n = {n}");
    }
}

#[test]
fn weighted_count_by_negative_entries() {
    // sum of 2^neg over staircase matrices is 2^(n^2)
    for n in 1..=4 {
        let total: BigInt = brute_force_uasms(&staircase(n), n)
            .unwrap()
            .iter()
            .map(|ua| BigInt::from(1) << ua.stats().neg)
            .sum();
        assert_eq!(total, BigInt::from(1) << (n * n), "n = {n}");
    }
}

#[test]
fn generators_are_sorted_and_valid() {
    for mu in [staircase(3), StrictPartition::new(vec![4, 2, 1]).unwrap()] {
        let n = mu.len();
        let st = generate_shifted(&mu, n).unwrap();
        assert!(st.windows(2).all(|w| w[0] < w[1]));
        assert!(st.iter().all(|t| t.validate().is_valid()));
        assert_eq!(st, generate_shifted_par(&mu, n).unwrap());
        let ua = brute_force_uasms(&mu, n).unwrap();
        assert!(ua.windows(2).all(|w| w[0].cells() < w[1].cells()));
        assert_eq!(ua, brute_force_uasms_par(&mu, n).unwrap());
    }
}

#[test]
fn ordinary_tableaux_count_the_dimension() {
    for n in 1..=4 {
        for w in 0..=5 {
            for lam in Partition::all_of_weight(w, n) {
                let count = generate_ordinary(&lam, n).unwrap();
                assert!(count.iter().all(|t| t.validate().is_valid()));
                assert_eq!(BigInt::from(count.len()), sp_dimension(&lam, n).unwrap(), "lambda = {lam}, n = {n}");
            }
        }
    }
}
