mod common;

use std::collections::HashSet;

use common::*;
use partmatrix::bitmatrix::{decode, encode, matrix_weight, split_part};
use partmatrix::identities::*;
use partmatrix::{class_part_stats, gen_partitions, thm3_map, thm5_map, ClassPredicate, FamilySelector, Partition};

fn part(parts: &[u64]) -> Partition {
    Partition::from_parts(parts.iter().copied()).unwrap()
}

#[test]
fn pentagonal_oracle_anchors() {
    let p = pentagonal_counts(25);
    assert_eq!(&p[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);
    assert_eq!(p[25], 1958);
    for n in 0..=15 {
        assert_eq!(brute_partitions(n).len() as u64, p[n as usize]);
    }
}

#[test]
fn enumeration_matches_pentagonal_counts() {
    let p = pentagonal_counts(25);
    for n in 0..=25u64 {
        let mut seen = HashSet::new();
        for lambda in gen_partitions(n, ClassPredicate::All) {
            assert_eq!(lambda.weight(), n);
            assert!(seen.insert(lambda), "duplicate partition of {n}");
        }
        assert_eq!(seen.len() as u64, p[n as usize], "n = {n}");
    }
}

#[test]
fn enumeration_order_matches_recursive_generation() {
    // The recursive oracle emits descending lists in decreasing lexicographic order.
    for n in 0..=18u64 {
        let listed: Vec<Vec<u64>> = gen_partitions(n, ClassPredicate::All).map(|l| l.parts_desc()).collect();
        assert_eq!(listed, brute_partitions(n), "n = {n}");
    }
}

#[test]
fn euler_identity_sanity_floor() {
    for n in 0..=25u64 {
        let odd = gen_partitions(n, ClassPredicate::OddParts).count();
        let distinct = gen_partitions(n, ClassPredicate::DistinctParts).count();
        assert_eq!(odd, distinct, "n = {n}");
    }
}

#[test]
fn part_counts_against_plain_vectors() {
    for n in 0..=18u64 {
        for parts in brute_partitions(n) {
            let lambda = part(&parts);
            assert_eq!(lambda.num_parts(), parts.len() as u64);
            assert_eq!(lambda.num_distinct_parts(), mults(&parts).len() as u64);
            assert!(lambda.num_parts() >= lambda.num_distinct_parts());
            assert_eq!(lambda.num_parts() == lambda.num_distinct_parts(), is_distinct(&parts));
        }
    }
}

#[test]
fn class_stats_against_plain_vectors() {
    for n in 0..=18u64 {
        let all = brute_partitions(n);
        let odd: Vec<_> = all.iter().filter(|p| is_odd(p)).collect();
        let distinct: Vec<_> = all.iter().filter(|p| is_distinct(p)).collect();
        let s = class_part_stats(n, ClassPredicate::OddParts);
        assert_eq!(s.members, odd.len() as u64);
        assert_eq!(s.total_parts, odd.iter().map(|p| p.len() as u64).sum::<u64>());
        assert_eq!(s.total_distinct_parts, odd.iter().map(|p| mults(p).len() as u64).sum::<u64>());
        let s = class_part_stats(n, ClassPredicate::DistinctParts);
        assert_eq!(s.total_parts, distinct.iter().map(|p| p.len() as u64).sum::<u64>());
    }
}

#[test]
fn counters_against_plain_vectors() {
    for n in 0..=20u64 {
        let all = brute_partitions(n);
        let count = |f: &dyn Fn(&Vec<u64>) -> bool| all.iter().filter(|p| f(p)).count() as u64;
        let evens = |p: &Vec<u64>| mults(p).keys().filter(|v| *v % 2 == 0).count() as u64;
        let repeated = |p: &Vec<u64>, at_least: u64| mults(p).values().filter(|&&c| c >= at_least).count() as u64;
        let one_exactly = |p: &Vec<u64>, t: u64| {
            let m = mults(p);
            m.values().filter(|&&c| c == t).count() == 1 && m.values().all(|&c| c == t || c == 1)
        };

        assert_eq!(a_exactly_one_even(n), count(&|p| evens(p) == 1), "a({n})");
        assert_eq!(a1_one_triple(n), count(&|p| one_exactly(p, 3)), "a1({n})");
        assert_eq!(f_one_quintuple(n), count(&|p| one_exactly(p, 5)), "f({n})");
        for k in 0..=4 {
            assert_eq!(count_exactly_k_distinct_even(n, k), count(&|p| evens(p) == k));
            assert_eq!(count_exactly_k_repeated(n, k), count(&|p| repeated(p, 2) == k));
            for pw in [2u32, 3] {
                let div = |p: &Vec<u64>| mults(p).keys().filter(|v| *v % (1 << pw) == 0).count() as u64;
                assert_eq!(count_ak_valuation(n, k, pw).unwrap(), count(&|p| div(p) == k));
                assert_eq!(count_bk_multiplicity(n, k, pw).unwrap(), count(&|p| repeated(p, 1 << pw) == k));
            }
        }
        for d in [2u64, 3, 5] {
            let c = count(&|p| p.iter().all(|v| v % d != 0));
            let e = count(&|p| mults(p).values().all(|&m| m < d));
            assert_eq!(glaisher_counts(n, d).unwrap(), (c, e));
        }
        let g_parts: u64 = all
            .iter()
            .filter(|p| is_distinct(p) && p.iter().all(|v| !p.contains(&(2 * v))))
            .map(|p| p.len() as u64)
            .sum();
        let h_distinct: u64 = all
            .iter()
            .filter(|p| is_odd(p) && mults(p).values().all(|&m| !format!("{m:b}").contains("11")))
            .map(|p| mults(p).len() as u64)
            .sum();
        assert_eq!(g_h_part_totals(n), (g_parts, h_distinct), "G/H at {n}");
    }
}

#[test]
fn encoding_round_trip_and_weight() {
    for n in 0..=25u64 {
        for lambda in gen_partitions(n, ClassPredicate::All) {
            let family = encode(&lambda);
            assert_eq!(decode(&family), lambda);
            let w: u128 = family.iter().map(|(x, m)| matrix_weight(x, m)).sum();
            assert_eq!(w, n as u128);
            for (v, c) in lambda.iter() {
                let key = split_part(v).unwrap();
                assert_eq!(family.get(key.odd).unwrap().column_value(key.exponent), c);
            }
        }
    }
}

#[test]
fn thm3_map_matches_multiplicity_arithmetic() {
    for n in 0..=25u64 {
        for parts in brute_partitions(n) {
            let got = thm3_map(&part(&parts)).parts_desc();
            assert_eq!(got, thm3_arith(&parts), "{parts:?}");
        }
    }
}

#[test]
fn thm5_identity_member_matches_multiplicity_arithmetic() {
    for p in [2u32, 3] {
        let id = FamilySelector::identity(p).unwrap();
        for n in 0..=25u64 {
            for parts in brute_partitions(n) {
                let got = thm5_map(&part(&parts), p, &id).unwrap().parts_desc();
                assert_eq!(got, thm5_arith(&parts, p as usize), "p = {p}, {parts:?}");
            }
        }
    }
}

#[test]
fn split_count_identity_per_multiplicity() {
    for m in 0..=(1u64 << 16) {
        let direct: u64 = (1..=16).map(|j| m / (1 << j)).sum();
        assert_eq!(direct, m - m.count_ones() as u64);
        assert_eq!(split_choices(m), direct);
        assert_eq!(conj1_local(&binary_digits(m)), direct);
    }
}

#[test]
fn k_totals_sum_to_partition_count() {
    let p = pentagonal_counts(30);
    for n in 0..=30u64 {
        let evens: u64 = (0..=n).map(|k| count_exactly_k_distinct_even(n, k)).sum();
        let repeated: u64 = (0..=n).map(|k| count_exactly_k_repeated(n, k)).sum();
        assert_eq!(evens, p[n as usize]);
        assert_eq!(repeated, p[n as usize]);
    }
}

#[test]
fn counts_vanish_past_k_bound() {
    for n in 0..=20u64 {
        let k = max_k(n, 2) + 1;
        assert_eq!(count_exactly_k_distinct_even(n, k), 0);
        assert_eq!(count_exactly_k_repeated(n, k), 0);
        for p in [2u32, 3] {
            let k = max_k(n, 1 << p) + 1;
            assert_eq!(count_ak_valuation(n, k, p).unwrap(), 0);
            assert_eq!(count_bk_multiplicity(n, k, p).unwrap(), 0);
        }
    }
}

#[test]
fn g_and_h_membership_implies_base_class() {
    for n in 0..=20u64 {
        for lambda in gen_partitions(n, ClassPredicate::All) {
            if is_g_member(&lambda) {
                assert!(lambda.is_distinct());
            }
            if is_h_member(&lambda) {
                assert!(lambda.is_odd());
            }
        }
    }
}

#[test]
fn hand_enumerated_g_and_h() {
    let g5: Vec<_> = gen_partitions(5, ClassPredicate::GClass).collect();
    assert_eq!(g5, vec![part(&[5]), part(&[4, 1]), part(&[3, 2])]);
    let h5: Vec<_> = gen_partitions(5, ClassPredicate::HClass).collect();
    assert_eq!(h5, vec![part(&[5]), part(&[3, 1, 1]), part(&[1; 5])]);
    let g6: Vec<_> = gen_partitions(6, ClassPredicate::GClass).collect();
    assert_eq!(g6, vec![part(&[6]), part(&[5, 1])]);
    let h6: Vec<_> = gen_partitions(6, ClassPredicate::HClass).collect();
    assert_eq!(h6, vec![part(&[5, 1]), part(&[3, 3])]);
}
