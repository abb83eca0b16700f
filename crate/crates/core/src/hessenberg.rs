//! The Hessenberg family `H_lambda` and the binary tree of compositions that
//! mirrors Kepler's tree of fractions.
//!
//! For a composition `lambda = <l_1, ..., l_k>` of `n - 1`, `H_lambda` has a
//! single top row followed by row blocks of heights `l_1, ..., l_k`, and
//! column blocks of widths `l_1, ..., l_k` followed by a single last column.
//! Row block `i` meets column block `i` in an identity, column blocks to its
//! right alternate between all ones and all zeros starting with ones, and
//! everything to its left is zero.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::Serialize;

use crate::binmat::BinaryMatrixRep;
use crate::combinatorics::{compositions_end_capped, Composition};
use crate::exactgram::{det, ExactGramian};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix {
    lambda: Composition,
    rep: BinaryMatrixRep,
}

impl HessenbergMatrix {
    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    /// Columns as vertex labels (no zero column).
    pub fn labels(&self) -> &[u32] {
        self.rep.columns()
    }

    pub fn rep(&self) -> &BinaryMatrixRep {
        &self.rep
    }

    /// The simplex: origin plus the columns.
    pub fn simplex(&self) -> BinaryMatrixRep {
        let mut cols = vec![0];
        cols.extend_from_slice(self.rep.columns());
        BinaryMatrixRep::new(self.n(), cols).expect("columns are distinct and nonzero")
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.rep.rows()
    }

    /// Every subdiagonal entry one and everything below it zero.
    pub fn is_unreduced_upper_hessenberg(&self) -> bool {
        let rows = self.rows();
        let n = self.n();
        (1..n).all(|i| rows[i][i - 1] == 1 && (0..i - 1).all(|j| rows[i][j] == 0))
    }

    pub fn abs_det(&self) -> BigUint {
        let m: Vec<Vec<BigInt>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        det(&m).expect("square").abs().to_biguint().expect("absolute value")
    }

    pub fn gramian(&self) -> ExactGramian {
        ExactGramian::of_labels(self.labels())
    }
}

/// Builds `H_lambda`. The first and last part must be at least 2, except
/// that the single-part compositions `<2>` and `<3>` are admitted as roots.
pub fn build_h(lambda: &Composition) -> Result<HessenbergMatrix, Error> {
    let parts = lambda.parts();
    let k = parts.len();
    if parts[0] < 2 || parts[k - 1] < 2 {
        return Err(Error::Invalid(format!("{lambda} must start and end with a part of at least 2")));
    }
    let n = lambda.weight() + 1;
    if n > 31 {
        return Err(Error::Invalid(format!("{lambda} is too large")));
    }
    // Row block i (0 = the single top row) starts at row_start[i]; column
    // block j (1-based, k + 1 = the single last column) at col_start[j].
    let mut row_start = vec![0, 1];
    let mut col_start = vec![0, 0];
    for &p in parts {
        row_start.push(row_start[row_start.len() - 1] + p);
        col_start.push(col_start[col_start.len() - 1] + p);
    }
    let widths: Vec<usize> = (1..=k + 1).map(|j| if j <= k { parts[j - 1] } else { 1 }).collect();
    let heights: Vec<usize> = (0..=k).map(|i| if i == 0 { 1 } else { parts[i - 1] }).collect();
    let mut rows = vec![vec![0u8; n]; n];
    for i in 0..=k {
        for j in i.max(1)..=k + 1 {
            for r in 0..heights[i] {
                for c in 0..widths[j - 1] {
                    let bit = if j == i {
                        u8::from(r == c)
                    } else {
                        u8::from((j - i) % 2 == 1)
                    };
                    rows[row_start[i] + r][col_start[j] + c] = bit;
                }
            }
        }
    }
    Ok(HessenbergMatrix {
        lambda: lambda.clone(),
        rep: BinaryMatrixRep::from_rows(&rows)?,
    })
}

/// Numerator and denominator of the continued fraction
/// `l_1 + 1/(l_2 + 1/(... + 1/l_k))`.
pub fn cf_numerator(lambda: &Composition) -> (BigUint, BigUint) {
    let (mut f0, mut f1) = (BigUint::from(0u32), BigUint::from(1u32));
    let (mut g0, mut g1) = (BigUint::from(1u32), BigUint::from(0u32));
    for &l in lambda.parts() {
        let f2 = &f1 * l + &f0;
        let g2 = &g1 * l + &g0;
        (f0, f1) = (f1, f2);
        (g0, g1) = (g1, g2);
    }
    (f1, g1)
}

/// Numerators `f_{k-1}` and `f_k` of the continued fraction in machine
/// integers.
fn last_two_numerators(parts: &[usize]) -> (u64, u64) {
    let (mut f0, mut f1) = (0u64, 1u64);
    for &l in parts {
        (f0, f1) = (f1, l as u64 * f1 + f0);
    }
    (f0, f1)
}

/// A node of the composition tree with its Kepler fraction `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionNode {
    pub lambda: Composition,
    pub p: u64,
    pub q: u64,
    pub level: usize,
}

impl CompositionNode {
    /// The node for `lambda` with `p = f_{k-1}` and `q = f_k - f_{k-1}`.
    pub fn new(lambda: Composition, level: usize) -> Self {
        let (a, b) = last_two_numerators(lambda.parts());
        CompositionNode {
            lambda,
            p: a,
            q: b - a,
            level,
        }
    }

    /// The tree root `<3>` with fraction `1/2`.
    pub fn root() -> Self {
        Self::new(Composition::new(vec![3]).expect("valid"), 0)
    }

    /// `p + q`, which equals `|det H_lambda|`.
    pub fn sum(&self) -> u64 {
        self.p + self.q
    }

    /// Left child appends one to the last part; right child lowers the last
    /// part by one and appends a 2. Their fractions are `p/(p+q)` and
    /// `q/(p+q)`.
    pub fn split(&self) -> (CompositionNode, CompositionNode) {
        let parts = self.lambda.parts();
        let last = parts.len() - 1;
        let mut left = parts.to_vec();
        left[last] += 1;
        let mut right = parts.to_vec();
        right[last] -= 1;
        right.push(2);
        let s = self.sum();
        (
            CompositionNode {
                lambda: Composition::new(left).expect("positive parts"),
                p: self.p,
                q: s,
                level: self.level + 1,
            },
            CompositionNode {
                lambda: Composition::new(right).expect("positive parts"),
                p: self.q,
                q: s,
                level: self.level + 1,
            },
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "level": self.level,
            "p": self.p,
            "q": self.q,
            "sum": self.sum(),
            "lambda": self.lambda.parts(),
        })
    }
}

/// Breadth-first levels `0..=depth` of the tree rooted at `<3>`, each level
/// left to right.
pub fn kepler_levels(depth: usize) -> Vec<Vec<CompositionNode>> {
    let mut levels = vec![vec![CompositionNode::root()]];
    for _ in 0..depth {
        let next = levels[levels.len() - 1]
            .iter()
            .flat_map(|node| {
                let (l, r) = node.split();
                [l, r]
            })
            .collect();
        levels.push(next);
    }
    levels
}

/// The compositions indexing `H_lambda` of size `n`, in tree order. Size 3
/// has the lone pre-root `<2>`, whose only child is the root `<3>`.
pub fn compositions_of_size(n: usize) -> Result<Vec<Composition>, Error> {
    match n {
        0..=2 => Err(Error::Invalid(format!("no Hessenberg simplices of size {n}"))),
        3 => Ok(vec![Composition::new(vec![2]).expect("valid")]),
        _ => Ok(kepler_levels(n - 4).pop().expect("nonempty").into_iter().map(|c| c.lambda).collect()),
    }
}

/// `false` when some later part exceeds the first part by more than one, in
/// which case `H_lambda` is not its own minimal representation.
pub fn is_minimal_candidate(lambda: &Composition) -> bool {
    let parts = lambda.parts();
    parts[1..].iter().all(|&l| l <= parts[0] + 1)
}

#[derive(Clone, Debug)]
pub struct LevelEntry {
    pub matrix: HessenbergMatrix,
    pub abs_det: BigUint,
    pub minimal_candidate: bool,
}

/// Every `H_lambda` of size `n`. The eliminated determinant is checked
/// against the continued-fraction numerator.
pub fn enumerate_level(n: usize) -> Result<Vec<LevelEntry>, Error> {
    let comps = compositions_of_size(n)?;
    debug_assert!(n < 4 || {
        let mut a = comps.clone();
        a.sort();
        a == compositions_end_capped(n - 1, 2)
    });
    comps
        .into_iter()
        .map(|lambda| {
            let matrix = build_h(&lambda)?;
            let abs_det = matrix.abs_det();
            let (f, _) = cf_numerator(&lambda);
            if abs_det != f {
                return Err(Error::Invalid(format!(
                    "|det H{lambda}| = {abs_det} but the continued fraction gives {f}"
                )));
            }
            Ok(LevelEntry {
                minimal_candidate: is_minimal_candidate(&lambda),
                matrix,
                abs_det,
            })
        })
        .collect()
}
