//! Census of acute 0/1-simplices modulo `B_n`.
//!
//! Every prefix of a minimal representation is minimal and every face of an
//! acute simplex is acute, so each acute `n`-simplex is reached exactly once
//! by growing its acute triangle prefix one column at a time and discarding
//! non-minimal intermediate matrices. A child's acute extensions are a subset
//! of its parent's, so only those are re-tested.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rayon::prelude::*;

use crate::binmat::{canonical_capped, is_minimal_labels, BinaryMatrixRep};
use crate::exactgram::{det, is_candidate, lifted_acute_extensions, ExactGramian};
use crate::hessenberg::{build_h, compositions_of_size};
use crate::triangles::{enumerate_triangles, TriangleFilter};
use crate::{check_cap, Error, DEFAULT_ACUTE_CAP};

/// A minimal acute simplex (origin plus `labels`) with the vertices of
/// `I^n` that extend it acutely.
#[derive(Clone, Debug)]
pub struct SimplexNode {
    labels: Vec<u32>,
    gram: ExactGramian,
    acute_ext: Vec<u32>,
}

impl SimplexNode {
    /// Nonzero column labels, increasing.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn acute_extensions(&self) -> &[u32] {
        &self.acute_ext
    }

    /// Least `m` with every label below `2^m`.
    pub fn ambient(&self) -> usize {
        ambient(&self.labels)
    }

    pub fn rep(&self, n: usize) -> BinaryMatrixRep {
        let mut cols = vec![0];
        cols.extend_from_slice(&self.labels);
        BinaryMatrixRep::new(n, cols).expect("labels are distinct and fit")
    }
}

fn ambient(labels: &[u32]) -> usize {
    labels.iter().map(|&c| 32 - c.leading_zeros() as usize).max().unwrap_or(0)
}

/// One node per acute triangle shape of `I^n`, with its extensions computed
/// in the triangle's own cube and lifted to `I^n`.
pub fn seed_triangles(n: usize) -> Vec<SimplexNode> {
    enumerate_triangles(n, TriangleFilter::Acute)
        .into_iter()
        .map(|s| {
            let (x, y) = s.labels();
            let labels = vec![x, y];
            let acute_ext = lifted_acute_extensions(&labels, ambient(&labels), n);
            SimplexNode {
                gram: ExactGramian::of_labels(&labels),
                labels,
                acute_ext,
            }
        })
        .collect()
}

/// Row numbers (first column most significant) are non-increasing down the
/// rows, which every minimal representation satisfies.
fn rows_non_increasing(labels: &[u32], n: usize) -> bool {
    let row = |i: usize| labels.iter().fold(0u64, |acc, &c| (acc << 1) | ((c >> i) & 1) as u64);
    (1..n).all(|i| row(i - 1) >= row(i))
}

/// The two inexpensive necessary conditions for `labels + [t]` to be a minimal
/// representation: `t` exceeds every existing label, and the row numbers of
/// the extended matrix are non-increasing.
pub fn passes_cheap_filters(labels: &[u32], t: u32, n: usize) -> bool {
    if labels.last().is_some_and(|&l| t <= l) {
        return false;
    }
    let mut ext = labels.to_vec();
    ext.push(t);
    rows_non_increasing(&ext, n)
}

/// Counters for the candidate-set bound checked during the census.
#[derive(Debug, Default)]
pub struct NeighborStats {
    pub checked: AtomicU64,
    pub violations: AtomicU64,
}

/// For a simplex with `j` vertices in `I^j`, at most two vertices of `I^j`
/// project into its interior, and two such vertices are antipodal.
fn check_one_neighbor(node: &SimplexNode, stats: &NeighborStats) {
    let j = node.labels.len() + 1;
    if node.ambient() > j || j > 20 {
        return;
    }
    let cands: Vec<u32> = (1..(1u32 << j))
        .filter(|v| !node.labels.contains(v) && is_candidate(&node.gram, &node.labels, *v))
        .collect();
    let ok = match cands[..] {
        [] | [_] => true,
        [a, b] => a ^ b == (1 << j) - 1,
        _ => false,
    };
    stats.checked.fetch_add(1, Ordering::Relaxed);
    if !ok {
        stats.violations.fetch_add(1, Ordering::Relaxed);
    }
}

/// Children of `node` in `I^n`: one per acute extension that yields a
/// minimal representation.
pub fn extend(node: &SimplexNode, n: usize) -> Vec<SimplexNode> {
    let mut out = Vec::new();
    for &t in &node.acute_ext {
        if !passes_cheap_filters(&node.labels, t, n) {
            continue;
        }
        let mut labels = node.labels.clone();
        labels.push(t);
        if !is_minimal_labels(n, &labels) {
            continue;
        }
        let gram = ExactGramian::of_labels(&labels);
        if !gram.det().is_positive() {
            continue;
        }
        let acute_ext = node
            .acute_ext
            .iter()
            .copied()
            .filter(|&s| s != t && crate::exactgram::extends_acutely(&gram, &labels, s))
            .collect();
        out.push(SimplexNode {
            labels,
            gram,
            acute_ext,
        });
    }
    out
}

/// An acute `n`-simplex in minimal representation with `|det|` of its
/// nonzero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcuteSimplex {
    pub rep: BinaryMatrixRep,
    pub abs_det: BigUint,
    pub hessenberg: bool,
}

impl AcuteSimplex {
    pub fn nu(&self) -> Vec<u32> {
        self.rep.column_numbers()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.rep.n(),
            "nu": self.nu(),
            "det": self.abs_det.to_string(),
            "hessenberg": self.hessenberg,
        })
    }
}

#[derive(Debug)]
pub struct Census {
    pub n: usize,
    pub simplices: Vec<AcuteSimplex>,
    /// Tree nodes visited, seeds included.
    pub nodes: u64,
    pub one_neighbor_checks: u64,
    pub one_neighbor_violations: u64,
}

impl Census {
    pub fn max_abs_det(&self) -> Option<&BigUint> {
        self.simplices.iter().map(|s| &s.abs_det).max()
    }

    /// Distinct determinants, increasing.
    pub fn det_set(&self) -> Vec<BigUint> {
        let mut v: Vec<BigUint> = self.simplices.iter().map(|s| s.abs_det.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

fn abs_det_of(labels: &[u32]) -> BigUint {
    let k = labels.len();
    let m: Vec<Vec<BigInt>> = (0..k)
        .map(|i| labels.iter().map(|&c| BigInt::from((c >> i) & 1)).collect())
        .collect();
    det(&m).expect("square").abs().to_biguint().expect("absolute value")
}

/// Minimal representations (nonzero labels) of every `H_lambda` of size `n`.
fn hessenberg_forms(n: usize) -> HashSet<Vec<u32>> {
    let Ok(comps) = compositions_of_size(n) else {
        return HashSet::new();
    };
    comps
        .iter()
        .map(|l| {
            let h = build_h(l).expect("tree compositions are valid");
            canonical_capped(&h.simplex(), usize::MAX).expect("no cap").columns()[1..].to_vec()
        })
        .collect()
}

/// All acute simplices with `n + 1` vertices in `I^n`, sorted by column
/// numbers.
pub fn enumerate_acute(n: usize) -> Result<Census, Error> {
    enumerate_acute_capped(n, DEFAULT_ACUTE_CAP)
}

pub fn enumerate_acute_capped(n: usize, cap: usize) -> Result<Census, Error> {
    if n < 3 {
        return Err(Error::Invalid("the census starts at n = 3".into()));
    }
    check_cap("dimension", n, cap)?;
    let stats = NeighborStats::default();
    let nodes = AtomicU64::new(0);
    let leaves: Vec<Vec<u32>> = seed_triangles(n)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let mut found = Vec::new();
            let mut stack = vec![seed];
            while let Some(node) = stack.pop() {
                nodes.fetch_add(1, Ordering::Relaxed);
                check_one_neighbor(&node, &stats);
                if node.labels.len() == n {
                    found.push(node.labels);
                    continue;
                }
                stack.extend(extend(&node, n));
            }
            found
        })
        .collect();
    let hess = hessenberg_forms(n);
    let mut simplices: Vec<AcuteSimplex> = leaves
        .into_iter()
        .map(|labels| AcuteSimplex {
            abs_det: abs_det_of(&labels),
            hessenberg: hess.contains(&labels),
            rep: {
                let mut cols = vec![0];
                cols.extend_from_slice(&labels);
                BinaryMatrixRep::new(n, cols).expect("valid")
            },
        })
        .collect();
    simplices.sort_by(|a, b| a.rep.columns().cmp(b.rep.columns()));
    Ok(Census {
        n,
        simplices,
        nodes: nodes.into_inner(),
        one_neighbor_checks: stats.checked.into_inner(),
        one_neighbor_violations: stats.violations.into_inner(),
    })
}

/// Largest `|det|` over the census of `I^n`.
pub fn max_abs_det(n: usize) -> Result<BigUint, Error> {
    let c = enumerate_acute(n)?;
    Ok(c.max_abs_det().cloned().unwrap_or_default())
}
