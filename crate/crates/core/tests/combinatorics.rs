use std::collections::BTreeSet;

use acute_cube::combinatorics::*;
use num_bigint::BigUint;
use proptest::prelude::*;

/// Partitions of `m` with parts at most `max`, built independently of the
/// library by plain recursion.
fn naive_partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(m)).rev() {
        for mut rest in naive_partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

const P: [u64; 14] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101];
const DELTA: [usize; 14] = [1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, 752, 1165, 1770];

#[test]
fn partition_of_zero_is_empty() {
    let p = partitions(0);
    assert_eq!(p.len(), 1);
    assert!(p[0].is_empty());
    assert_eq!(p[0].weight(), 0);
}

#[test]
fn partition_counts_match_table() {
    assert_eq!(partitions(4).len(), 5);
    assert_eq!(partitions(9).len(), 30);
    for (m, &p) in P.iter().enumerate() {
        assert_eq!(partitions(m).len() as u64, p, "p({m})");
    }
    assert_eq!(partition_counts(13), P.to_vec());
}

#[test]
fn partitions_agree_with_naive_recursion_in_order() {
    for m in 0..=14 {
        let got: Vec<Vec<usize>> = partitions(m).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, naive_partitions(m, m), "m = {m}");
        // Reverse lexicographic: strictly decreasing sequence.
        assert!(got.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn double_partition_counts() {
    assert_eq!(double_partitions(3).len(), 10);
    assert_eq!(double_partitions(0).len(), 1);
    for (n, &d) in DELTA.iter().enumerate() {
        let dps = double_partitions(n);
        assert_eq!(dps.len(), d, "n = {n}");
        assert!(dps.iter().all(|dp| dp.total() == n));
        let distinct: BTreeSet<_> = dps.iter().collect();
        assert_eq!(distinct.len(), d);
    }
}

#[test]
fn end_capped_compositions() {
    let four: Vec<Vec<usize>> = compositions_end_capped(4, 2).iter().map(|c| c.parts().to_vec()).collect();
    assert_eq!(four.len(), 2);
    assert!(four.contains(&vec![4]) && four.contains(&vec![2, 2]));
    for m in 1..=15 {
        assert_eq!(compositions_end_capped(m, 1).len(), 1 << (m - 1), "m = {m}");
    }
    for n in 4..=16 {
        assert_eq!(compositions_end_capped(n - 1, 2).len(), 1 << (n - 4), "n = {n}");
    }
    assert!(compositions_end_capped(3, 2).iter().all(|c| c.parts() == [3]));
    assert!(compositions_end_capped(1, 2).is_empty());
}

fn cycle_type_of(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    Partition::new(lens).unwrap()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn class_sizes_match_listing_symmetric_groups() {
    for len in 1..=6 {
        let perms = all_perms(len);
        for t in partitions(len) {
            let listed = perms.iter().filter(|p| cycle_type_of(p) == t).count();
            assert_eq!(sym_class_size(&t, len).unwrap(), BigUint::from(listed), "{t:?}");
        }
    }
    let t = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(sym_class_size(&t, 3).unwrap(), BigUint::from(3u32));
}

#[test]
fn class_size_special_cases() {
    for len in 1..=10 {
        let id = Partition::new(vec![1; len]).unwrap();
        assert_eq!(sym_class_size(&id, len).unwrap(), BigUint::from(1u32));
        let cyc = Partition::new(vec![len]).unwrap();
        assert_eq!(sym_class_size(&cyc, len).unwrap(), factorial(len - 1));
    }
    let t = Partition::new(vec![2, 2]).unwrap();
    assert!(sym_class_size(&t, 5).is_err());
}

#[test]
fn class_equation() {
    for m in 0..=10 {
        let sum: BigUint = partitions(m).iter().map(|t| sym_class_size(t, m).unwrap()).sum();
        assert_eq!(sum, factorial(m), "m = {m}");
    }
}

#[test]
fn binomials() {
    assert_eq!(binomial_small(8, 3), BigUint::from(56u32));
    assert_eq!(binomial_small(3, 5), BigUint::from(0u32));
    assert_eq!(binomial_small(0, 0), BigUint::from(1u32));
}

proptest! {
    #[test]
    fn partition_new_normalizes(parts in prop::collection::vec(1usize..20, 0..12)) {
        let p = Partition::new(parts.clone()).unwrap();
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.weight(), parts.iter().sum::<usize>());
        prop_assert_eq!(Partition::from_multiplicities(&p.multiplicities()), p);
    }

    #[test]
    fn compositions_sum_and_are_distinct(m in 1usize..12) {
        let all = compositions(m);
        prop_assert!(all.iter().all(|c| c.weight() == m));
        let set: BTreeSet<_> = all.iter().collect();
        prop_assert_eq!(set.len(), all.len());
    }
}
