//! The hyperoctahedral group `B_n` as signed permutations and its cycle index
//! on the `2^n` cube vertices.
//!
//! An element is a pair `(u, v)`: `v` is a bit mask of complemented
//! coordinates and `u` a permutation of coordinates. It sends a vertex label
//! `x` to `y` with `y_i = (x xor v)_{u(i)}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial_small, double_partitions, factorial, sym_class_size, Partition};
use crate::{check_cap, Error, DEFAULT_DIMENSION_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    /// `image[i] = u(i)`, zero based.
    image: Vec<usize>,
    /// Bit `i` set when coordinate `i` is complemented.
    flags: u32,
}

impl SignedPermutation {
    pub fn new(image: Vec<usize>, flags: u32) -> Result<Self, Error> {
        let n = image.len();
        if n > 31 {
            return Err(Error::Invalid("at most 31 coordinates are supported".into()));
        }
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(Error::Invalid(format!("{image:?} is not a permutation")));
            }
            seen[i] = true;
        }
        if n < 32 && flags >> n != 0 {
            return Err(Error::Invalid("complement flags outside the dimension".into()));
        }
        Ok(SignedPermutation { image, flags })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (0..n).collect(),
            flags: 0,
        }
    }

    /// The pure complement `c_w`.
    pub fn complement(n: usize, w: u32) -> Result<Self, Error> {
        Self::new((0..n).collect(), w)
    }

    /// Signed one-line notation, one based: entry `i` is `+-u(i)`, with a
    /// negative sign marking coordinate `i` as complemented.
    pub fn from_signed_images(w: &[i32]) -> Result<Self, Error> {
        let mut image = Vec::with_capacity(w.len());
        let mut flags = 0u32;
        for (i, &x) in w.iter().enumerate() {
            if x == 0 {
                return Err(Error::Invalid("signed images are one based".into()));
            }
            if x < 0 {
                flags |= 1 << i;
            }
            image.push(x.unsigned_abs() as usize - 1);
        }
        Self::new(image, flags)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn flags(&self) -> u32 {
        self.flags
    }

    pub fn apply(&self, x: u32) -> Result<u32, Error> {
        if (x as u64) >> self.n() != 0 {
            return Err(Error::Invalid(format!(
                "label {x} is not a vertex of I^{}",
                self.n()
            )));
        }
        Ok(self.apply_unchecked(x))
    }

    #[inline]
    pub fn apply_unchecked(&self, x: u32) -> u32 {
        let z = x ^ self.flags;
        let mut y = 0;
        for (i, &ui) in self.image.iter().enumerate() {
            y |= ((z >> ui) & 1) << i;
        }
        y
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n(), "dimension mismatch");
        let image = self.image.iter().map(|&ui| other.image[ui]).collect();
        // self's flag on coordinate i of other's output lands on coordinate
        // other.image[i] of the input.
        let mut moved = 0u32;
        for (i, &oi) in other.image.iter().enumerate() {
            moved |= ((self.flags >> i) & 1) << oi;
        }
        SignedPermutation {
            image,
            flags: other.flags ^ moved,
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.n();
        let mut image = vec![0; n];
        let mut flags = 0u32;
        for (i, &ui) in self.image.iter().enumerate() {
            image[ui] = i;
            flags |= ((self.flags >> ui) & 1) << i;
        }
        SignedPermutation { image, flags }
    }

    /// Cycles of the underlying coordinate permutation, each listed from its
    /// smallest coordinate.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.image[i];
            }
            out.push(c);
        }
        out
    }

    pub fn signed_cycle_type(&self) -> SignedCycleType {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for c in self.cycles() {
            let chi: u32 = c.iter().map(|&j| (self.flags >> j) & 1).sum();
            if chi.is_multiple_of(2) {
                plus.push(c.len());
            } else {
                minus.push(c.len());
            }
        }
        SignedCycleType {
            plus: Partition::new(plus).expect("cycle lengths are positive"),
            minus: Partition::new(minus).expect("cycle lengths are positive"),
        }
    }

    /// Cycle type of the induced permutation of the `2^n` vertex labels.
    pub fn induced_cycle_type(&self) -> Result<InducedType, Error> {
        self.induced_cycle_type_capped(DEFAULT_DIMENSION_CAP)
    }

    pub fn induced_cycle_type_capped(&self, cap: usize) -> Result<InducedType, Error> {
        check_cap("dimension", self.n(), cap)?;
        let size = 1usize << self.n();
        let mut seen = vec![false; size];
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for s in 0..size {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply_unchecked(x as u32) as usize;
            }
            *counts.entry(len).or_default() += 1;
        }
        Ok(InducedType(counts.into_iter().collect()))
    }

    /// Every element of `B_n`, flags varying fastest. Meant for oracles.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for x in 0..n {
                    if !p.contains(&x) {
                        let mut q = p.clone();
                        q.push(x);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let mut out = Vec::new();
        for p in perms {
            for v in 0..(1u32 << n) {
                out.push(SignedPermutation {
                    image: p.clone(),
                    flags: v,
                });
            }
        }
        out
    }
}

/// Cycle lengths of the even-signed and odd-signed cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub plus: Partition,
    pub minus: Partition,
}

impl SignedCycleType {
    pub fn n(&self) -> usize {
        self.plus.weight() + self.minus.weight()
    }

    /// Number of group elements of this signed cycle type in `B_n`.
    pub fn class_size(&self, n: usize) -> Result<BigUint, Error> {
        if self.n() != n {
            return Err(Error::Invalid(format!(
                "signed cycle type of weight {} used in dimension {n}",
                self.n()
            )));
        }
        let k = self.plus.weight();
        let cycles = self.plus.len() + self.minus.len();
        Ok(binomial_small(n, k)
            * sym_class_size(&self.plus, k)?
            * sym_class_size(&self.minus, n - k)?
            * (BigUint::one() << (n - cycles)))
    }

    /// A group element of this type: plus-cycles on the low coordinates,
    /// minus-cycles above them, one complement flag per minus-cycle on its
    /// smallest coordinate.
    pub fn representative(&self) -> SignedPermutation {
        let n = self.n();
        let mut image = vec![0; n];
        let mut flags = 0u32;
        let mut start = 0;
        for (parts, signed) in [(self.plus.parts(), false), (self.minus.parts(), true)] {
            for &len in parts {
                for j in 0..len {
                    image[start + j] = start + (j + 1) % len;
                }
                if signed {
                    flags |= 1 << start;
                }
                start += len;
            }
        }
        SignedPermutation { image, flags }
    }
}

/// Sparse cycle type of a permutation of cube vertices: sorted
/// `(length, multiplicity)` pairs, zero multiplicities omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InducedType(pub Vec<(u64, u64)>);

impl InducedType {
    pub fn total_cycles(&self) -> u64 {
        self.0.iter().map(|&(_, m)| m).sum()
    }

    pub fn points(&self) -> u64 {
        self.0.iter().map(|&(l, m)| l * m).sum()
    }

    pub fn multiplicity(&self, len: u64) -> u64 {
        self.0
            .iter()
            .find(|&&(l, _)| l == len)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    /// Row order used by [`CycleIndexTable`]: more cycles first, then the
    /// dense multiplicity vector `(t_1, t_2, ...)` in increasing lexicographic
    /// order.
    pub fn canonical_cmp(&self, other: &InducedType) -> std::cmp::Ordering {
        other
            .total_cycles()
            .cmp(&self.total_cycles())
            .then_with(|| self.dense_cmp(other))
    }

    fn dense_cmp(&self, other: &InducedType) -> std::cmp::Ordering {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        // Walk both sparse vectors by increasing length; the first length
        // where the multiplicities differ decides.
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(&&(la, ma)), Some(&&(lb, mb))) => {
                    if la == lb {
                        if ma != mb {
                            return ma.cmp(&mb);
                        }
                        a.next();
                        b.next();
                    } else if la < lb {
                        return ma.cmp(&0);
                    } else {
                        return 0.cmp(&mb);
                    }
                }
                (Some(&&(_, ma)), None) => return ma.cmp(&0),
                (None, Some(&&(_, mb))) => return 0.cmp(&mb),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleIndexRow {
    pub count: BigUint,
    pub induced: InducedType,
}

/// The cycle index `Z_n` in condensed tabulated form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleIndexTable {
    pub n: usize,
    pub rows: Vec<CycleIndexRow>,
}

impl CycleIndexTable {
    /// Merges `(count, type)` pairs with equal types and sorts the rows.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (BigUint, InducedType)>) -> Self {
        let mut merged: BTreeMap<InducedType, BigUint> = BTreeMap::new();
        for (c, t) in pairs {
            *merged.entry(t).or_insert_with(BigUint::zero) += c;
        }
        let mut rows: Vec<CycleIndexRow> = merged
            .into_iter()
            .map(|(induced, count)| CycleIndexRow { count, induced })
            .collect();
        rows.sort_by(|a, b| a.induced.canonical_cmp(&b.induced));
        CycleIndexTable { n, rows }
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|r| &r.count).sum()
    }

    /// Cycle lengths occurring anywhere in the table, increasing.
    pub fn lengths(&self) -> Vec<u64> {
        let mut ls: Vec<u64> = self
            .rows
            .iter()
            .flat_map(|r| r.induced.0.iter().map(|&(l, _)| l))
            .collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "count": r.count.to_string(),
                    "type": r.induced.0.iter().map(|&(l, m)| [l, m]).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "rows": rows })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let bad = || Error::Parse("malformed cycle-index JSON".into());
        let n = v["n"].as_u64().ok_or_else(bad)? as usize;
        let mut rows = Vec::new();
        for r in v["rows"].as_array().ok_or_else(bad)? {
            let count: BigUint = r["count"].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut ty = Vec::new();
            for pair in r["type"].as_array().ok_or_else(bad)? {
                let l = pair[0].as_u64().ok_or_else(bad)?;
                let m = pair[1].as_u64().ok_or_else(bad)?;
                ty.push((l, m));
            }
            rows.push(CycleIndexRow {
                count,
                induced: InducedType(ty),
            });
        }
        Ok(CycleIndexTable { n, rows })
    }

    /// Comma separated: count, then one column per occurring cycle length.
    pub fn to_csv(&self) -> String {
        let lengths = self.lengths();
        let mut s = String::from("count");
        for l in &lengths {
            s.push_str(&format!(",x{l}"));
        }
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.count.to_string());
            for &l in &lengths {
                s.push_str(&format!(",{}", r.induced.multiplicity(l)));
            }
            s.push('\n');
        }
        s
    }

    /// Aligned text table: right-aligned counts, one column per occurring
    /// cycle length, blanks for zero multiplicities.
    pub fn to_text(&self) -> String {
        let lengths = self.lengths();
        let counts: Vec<String> = self.rows.iter().map(|r| r.count.to_string()).collect();
        let cw = counts.iter().map(|c| c.len()).max().unwrap_or(0).max(5);
        let widths: Vec<usize> = lengths
            .iter()
            .map(|&l| {
                let m = self
                    .rows
                    .iter()
                    .map(|r| r.induced.multiplicity(l).to_string().len())
                    .max()
                    .unwrap_or(1);
                m.max(l.to_string().len())
            })
            .collect();
        let mut s = format!("{:>cw$} |", "count");
        for (l, w) in lengths.iter().zip(&widths) {
            s.push_str(&format!(" {:>w$}", l));
        }
        s.push('\n');
        for (r, c) in self.rows.iter().zip(&counts) {
            s.push_str(&format!("{c:>cw$} |"));
            for (&l, w) in lengths.iter().zip(&widths) {
                let m = r.induced.multiplicity(l);
                if m == 0 {
                    s.push_str(&format!(" {:>w$}", ""));
                } else {
                    s.push_str(&format!(" {m:>w$}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

/// `|B_n| = 2^n n!`.
pub fn group_order(n: usize) -> BigUint {
    factorial(n) << n
}

/// The cycle index of `B_n`, one representative per conjugacy class.
pub fn cycle_index(n: usize) -> Result<CycleIndexTable, Error> {
    cycle_index_capped(n, DEFAULT_DIMENSION_CAP)
}

pub fn cycle_index_capped(n: usize, cap: usize) -> Result<CycleIndexTable, Error> {
    if n == 0 {
        return Err(Error::Invalid("the cycle index needs n >= 1".into()));
    }
    check_cap("dimension", n, cap)?;
    let pairs: Vec<(BigUint, InducedType)> = double_partitions(n)
        .into_par_iter()
        .map(|dp| {
            let t = SignedCycleType {
                plus: dp.plus,
                minus: dp.minus,
            };
            let size = t.class_size(n).expect("weights agree by construction");
            let ty = t
                .representative()
                .induced_cycle_type_capped(cap)
                .expect("cap checked above");
            (size, ty)
        })
        .collect();
    Ok(CycleIndexTable::from_pairs(n, pairs))
}

/// Cycle index by running through every group element. Exponentially slow;
/// only for cross-checking small `n`.
pub fn cycle_index_brute_force(n: usize) -> CycleIndexTable {
    let pairs = SignedPermutation::all(n)
        .into_iter()
        .map(|h| (BigUint::one(), h.induced_cycle_type_capped(n).unwrap()));
    CycleIndexTable::from_pairs(n, pairs)
}
