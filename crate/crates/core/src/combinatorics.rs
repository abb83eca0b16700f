//! Partitions, compositions and symmetric-group class sizes.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::Error;

/// An integer partition stored as a non-increasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity vector: entry `i` counts the parts equal to `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut t = vec![0; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            t[p - 1] += 1;
        }
        t
    }

    /// Inverse of [`Partition::multiplicities`].
    pub fn from_multiplicities(t: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &m) in t.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, m));
        }
        Partition { parts }
    }
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(
                "a composition needs at least one part and all parts positive".into(),
            ));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "<{}>", s.join(","))
    }
}

/// A pair of partitions, one for the even-signed cycles and one for the odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoublePartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl DoublePartition {
    pub fn total(&self) -> usize {
        self.plus.weight() + self.minus.weight()
    }
}

/// All partitions of `m` in reverse lexicographic order, starting from `[m]`
/// and ending at `[1; m]`.
pub fn partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut a = vec![m];
    loop {
        out.push(Partition { parts: a.clone() });
        // Find the rightmost part larger than one.
        let mut ones = 0;
        while let Some(&1) = a.last() {
            a.pop();
            ones += 1;
        }
        let Some(last) = a.last_mut() else { break };
        *last -= 1;
        let x = *last;
        let mut rest = ones + 1;
        while rest > x {
            a.push(x);
            rest -= x;
        }
        a.push(rest);
    }
    out
}

/// Partition counts p(0), ..., p(m) by Euler's recurrence over parts.
pub fn partition_counts(m: usize) -> Vec<u64> {
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for s in part..=m {
            p[s] += p[s - part];
        }
    }
    p
}

/// All double partitions with total weight `n`, grouped by the weight of the
/// plus part (0 up to `n`), each group in reverse lexicographic order.
pub fn double_partitions(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        let minus = partitions(n - k);
        for plus in partitions(k) {
            for m in &minus {
                out.push(DoublePartition {
                    plus: plus.clone(),
                    minus: m.clone(),
                });
            }
        }
    }
    out
}

/// All compositions of `m`, in lexicographic order of the part sequence.
pub fn compositions(m: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, &mut Vec::new(), &mut out);
    }
    out
}

/// Compositions of `m` whose first and last parts are both at least `min_end`.
pub fn compositions_end_capped(m: usize, min_end: usize) -> Vec<Composition> {
    compositions(m)
        .into_iter()
        .filter(|c| c.parts[0] >= min_end && c.parts[c.parts.len() - 1] >= min_end)
        .collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: &BigUint, k: usize) -> BigUint {
    let k_big = BigUint::from(k);
    if k_big > *n {
        return BigUint::default();
    }
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_small(n: usize, k: usize) -> BigUint {
    binomial(&BigUint::from(n), k)
}

/// Size of the conjugacy class of `S_len` whose cycle type is `t`:
/// `len! / prod(i^t_i * t_i!)`.
pub fn sym_class_size(t: &Partition, len: usize) -> Result<BigUint, Error> {
    if t.weight() != len {
        return Err(Error::Invalid(format!(
            "cycle type of weight {} is not a cycle type of S_{}",
            t.weight(),
            len
        )));
    }
    let mut denom = BigUint::one();
    for (i, &m) in t.multiplicities().iter().enumerate() {
        denom *= BigUint::from(i + 1).pow(m as u32) * factorial(m);
    }
    Ok(factorial(len) / denom)
}
