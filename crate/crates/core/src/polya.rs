//! Burnside counting of cube vertex subsets modulo `B_n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::binomial;
use crate::hyperoct::{cycle_index, group_order, CycleIndexTable, InducedType};
use crate::Error;

/// Number of vertex subsets fixed by a permutation of type `tau`.
pub fn fixed_count(tau: &InducedType) -> BigUint {
    BigUint::one() << tau.total_cycles()
}

/// Number of `k`-subsets fixed by a permutation of type `tau`: a fixed subset
/// is a union of whole cycles, so sum over the ways of picking `kappa_j`
/// cycles of each length `j` with `sum j kappa_j = k`.
pub fn fixed_k_count(tau: &InducedType, k: u64) -> BigUint {
    fn rec(support: &[(u64, u64)], k: u64) -> BigUint {
        let Some((&(len, mult), rest)) = support.split_first() else {
            return if k == 0 { BigUint::one() } else { BigUint::zero() };
        };
        let mult_big = BigUint::from(mult);
        let mut acc = BigUint::zero();
        let mut c = 0;
        while c <= mult && c * len <= k {
            let tail = rec(rest, k - c * len);
            if !tail.is_zero() {
                acc += binomial(&mult_big, c as usize) * tail;
            }
            c += 1;
        }
        acc
    }
    // Longest cycles first keeps the branching small.
    let mut support = tau.0.clone();
    support.reverse();
    rec(&support, k)
}

/// The coefficients of `prod_j (1 + z^j)^{t_j}` up to degree `max_k`: entry
/// `k` equals [`fixed_k_count`] of the same type.
pub fn fixed_counts_by_size(tau: &InducedType, max_k: usize) -> Vec<BigUint> {
    let mut poly = vec![BigUint::zero(); max_k + 1];
    poly[0] = BigUint::one();
    for &(len, mult) in &tau.0 {
        let len = len as usize;
        if len > max_k {
            continue;
        }
        let mult_big = BigUint::from(mult);
        let max_c = (max_k / len).min(mult as usize);
        let coeffs: Vec<BigUint> = (0..=max_c).map(|c| binomial(&mult_big, c)).collect();
        let mut next = vec![BigUint::zero(); max_k + 1];
        for (d, p) in poly.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (c, b) in coeffs.iter().enumerate() {
                let e = d + c * len;
                if e > max_k {
                    break;
                }
                next[e] += p * b;
            }
        }
        poly = next;
    }
    poly
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "Burnside sum not divisible by the group order");
    q
}

/// Number of classes of `k`-vertex subsets of `I^n`.
pub fn count_classes_in(table: &CycleIndexTable, k: u64) -> BigUint {
    let sum: BigUint = table
        .rows
        .par_iter()
        .map(|r| &r.count * fixed_k_count(&r.induced, k))
        .reduce(BigUint::zero, |a, b| a + b);
    exact_div(sum, &group_order(table.n))
}

pub fn count_classes(n: usize, k: u64) -> Result<BigUint, Error> {
    if k > (1u64 << n) {
        return Err(Error::Invalid(format!("{k} vertices do not fit in I^{n}")));
    }
    Ok(count_classes_in(&cycle_index(n)?, k))
}

/// Counts for every `k` from 0 to `max_k` in one pass over the table.
pub fn count_row_in(table: &CycleIndexTable, max_k: usize) -> Vec<BigUint> {
    let sums = table
        .rows
        .par_iter()
        .map(|r| {
            fixed_counts_by_size(&r.induced, max_k)
                .into_iter()
                .map(|f| f * &r.count)
                .collect::<Vec<_>>()
        })
        .reduce(
            || vec![BigUint::zero(); max_k + 1],
            |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect(),
        );
    let order = group_order(table.n);
    sums.into_iter().map(|s| exact_div(s, &order)).collect()
}

/// Total number of classes of vertex subsets of `I^n`, empty set included.
pub fn count_all_in(table: &CycleIndexTable) -> BigUint {
    let sum: BigUint = table.rows.iter().map(|r| &r.count * fixed_count(&r.induced)).sum();
    exact_div(sum, &group_order(table.n))
}

pub fn count_all(n: usize) -> Result<BigUint, Error> {
    Ok(count_all_in(&cycle_index(n)?))
}

/// Counts of `k`-vertex classes for `k = 0..=2^n` as CSV: `n,k,count`.
pub fn row_to_csv(n: usize, row: &[BigUint]) -> String {
    let mut s = String::from("n,k,count\n");
    for (k, c) in row.iter().enumerate() {
        s.push_str(&format!("{n},{k},{c}\n"));
    }
    s
}

pub fn row_to_json(n: usize, row: &[BigUint]) -> serde_json::Value {
    serde_json::json!({
        "n": n,
        "counts": row.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}
