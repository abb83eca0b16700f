//! 0/1-matrix representations of vertex sets and their minimal forms.
//!
//! A matrix is stored by column labels: bit `i` of a label is the entry in
//! row `i`. Row numbers read a row as a binary number with the first column
//! most significant.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::hyperoct::SignedPermutation;
use crate::{check_cap, Error, DEFAULT_FACTORIAL_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryMatrixRep {
    n: usize,
    columns: Vec<u32>,
}

impl BinaryMatrixRep {
    pub fn new(n: usize, columns: Vec<u32>) -> Result<Self, Error> {
        if n > 31 {
            return Err(Error::Invalid("at most 31 rows are supported".into()));
        }
        if columns.is_empty() || columns.len() > 63 {
            return Err(Error::Invalid("a matrix needs between 1 and 63 columns".into()));
        }
        for (i, &c) in columns.iter().enumerate() {
            if c >> n != 0 {
                return Err(Error::Invalid(format!("label {c} is not a vertex of I^{n}")));
            }
            if columns[..i].contains(&c) {
                return Err(Error::Invalid(format!("column {c} is repeated")));
            }
        }
        Ok(BinaryMatrixRep { n, columns })
    }

    /// Builds a matrix from explicit 0/1 rows.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, Error> {
        let n = rows.len();
        let k = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut columns = vec![0u32; k];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Invalid("rows of unequal length".into()));
            }
            for (c, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => columns[c] |= 1 << i,
                    _ => return Err(Error::Invalid("entries must be 0 or 1".into())),
                }
            }
        }
        Self::new(n, columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        ((self.columns[col] >> row) & 1) as u8
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.k()).map(|c| self.entry(i, c)).collect())
            .collect()
    }

    /// Column labels sorted increasingly.
    pub fn column_numbers(&self) -> Vec<u32> {
        let mut v = self.columns.clone();
        v.sort_unstable();
        v
    }

    pub fn row_number(&self, row: usize) -> u64 {
        let k = self.k();
        self.columns
            .iter()
            .enumerate()
            .map(|(c, &x)| (((x >> row) & 1) as u64) << (k - 1 - c))
            .sum()
    }

    /// Row numbers in row order.
    pub fn row_numbers_unsorted(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.row_number(i)).collect()
    }

    /// Row numbers sorted non-increasingly.
    pub fn row_numbers(&self) -> Vec<u64> {
        let mut r = self.row_numbers_unsorted();
        r.sort_unstable_by(|a, b| b.cmp(a));
        r
    }

    /// The image of every column under `g`.
    pub fn act(&self, g: &SignedPermutation) -> Result<Self, Error> {
        if g.n() != self.n {
            return Err(Error::Invalid("group element of the wrong dimension".into()));
        }
        Ok(BinaryMatrixRep {
            n: self.n,
            columns: self.columns.iter().map(|&c| g.apply_unchecked(c)).collect(),
        })
    }

    /// Reorders columns: new column `i` is old column `order[i]`.
    pub fn permute_columns(&self, order: &[usize]) -> Result<Self, Error> {
        let mut seen = vec![false; self.k()];
        if order.len() != self.k() || order.iter().any(|&i| i >= self.k() || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Invalid("not a column permutation".into()));
        }
        Ok(BinaryMatrixRep {
            n: self.n,
            columns: order.iter().map(|&i| self.columns[i]).collect(),
        })
    }

    /// Drops a zero column if there is one.
    pub fn without_zero(&self) -> Vec<u32> {
        self.columns.iter().copied().filter(|&c| c != 0).collect()
    }

    /// Text format: `n k` on the first line, then `n` lines of `k` digits.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k());
        for row in self.rows() {
            s.extend(row.iter().map(|&b| if b == 1 { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_, _>>()?;
        let [n, k] = dims[..] else {
            return Err(Error::Parse(format!("header must be `n k`, got {header:?}")));
        };
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {n} rows, found {i}")))?;
            let row: Vec<u8> = line
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::Parse(format!("unexpected character {ch:?} in row {}", i + 1))),
                })
                .collect::<Result<_, _>>()?;
            if row.len() != k {
                return Err(Error::Parse(format!("row {} has {} entries, expected {k}", i + 1, row.len())));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing lines after the matrix".into()));
        }
        if n == 0 {
            return Err(Error::Parse("a matrix needs at least one row".into()));
        }
        Self::from_rows(&rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "k": self.k(), "columns": self.columns })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let bad = || Error::Parse("expected {\"n\":..,\"k\":..,\"columns\":[..]}".into());
        let n = v["n"].as_u64().ok_or_else(bad)? as usize;
        let cols: Vec<u32> = v["columns"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|c| c.as_u64().and_then(|c| u32::try_from(c).ok()).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        if let Some(k) = v.get("k") {
            if k.as_u64() != Some(cols.len() as u64) {
                return Err(Error::Parse("`k` disagrees with the column list".into()));
            }
        }
        Self::new(n, cols)
    }

    /// Accepts either the text or the JSON format.
    pub fn parse(input: &str) -> Result<Self, Error> {
        if input.trim_start().starts_with('{') {
            let v: serde_json::Value =
                serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
            Self::from_json(&v)
        } else {
            Self::parse_text(input)
        }
    }
}

fn check_shape(p1: &BinaryMatrixRep, p2: &BinaryMatrixRep) -> Result<(), Error> {
    if p1.n != p2.n || p1.k() != p2.k() {
        return Err(Error::Invalid(format!(
            "shape mismatch: {}x{} vs {}x{}",
            p1.n,
            p1.k(),
            p2.n,
            p2.k()
        )));
    }
    Ok(())
}

/// Whether the rows of `p2` are a permutation of the rows of `p1`, each
/// possibly complemented, with columns kept in place.
pub fn signed_row_equivalent(p1: &BinaryMatrixRep, p2: &BinaryMatrixRep) -> Result<bool, Error> {
    check_shape(p1, p2)?;
    let full = (1u64 << p1.k()) - 1;
    let both = |p: &BinaryMatrixRep| {
        let mut v: Vec<u64> = p.row_numbers_unsorted().into_iter().flat_map(|r| [r, full - r]).collect();
        v.sort_unstable();
        v
    };
    Ok(both(p1) == both(p2))
}

/// A group element `g` with `g` applied to each column of `p2` giving the
/// same column of `p1`, if the columns already line up.
pub fn row_witness(p1: &BinaryMatrixRep, p2: &BinaryMatrixRep) -> Option<SignedPermutation> {
    if check_shape(p1, p2).is_err() {
        return None;
    }
    let full = (1u64 << p1.k()) - 1;
    let mut pool: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, r) in p2.row_numbers_unsorted().into_iter().enumerate() {
        pool.entry(r).or_default().push(i);
    }
    let mut image = vec![0; p1.n];
    let mut flags = 0u32;
    for (i, r) in p1.row_numbers_unsorted().into_iter().enumerate() {
        // A row and its complement are different numbers, so any row of p2
        // in the same complementary pair is interchangeable here.
        if let Some(j) = pool.get_mut(&r).and_then(Vec::pop) {
            image[i] = j;
        } else {
            let j = pool.get_mut(&(full - r)).and_then(Vec::pop)?;
            image[i] = j;
            flags |= 1 << j;
        }
    }
    let g = SignedPermutation::new(image, flags).ok()?;
    let ok = p2
        .columns
        .iter()
        .zip(&p1.columns)
        .all(|(&c2, &c1)| g.apply_unchecked(c2) == c1);
    ok.then_some(g)
}

fn for_each_permutation(k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(pos: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if pos == perm.len() {
            return f(perm);
        }
        for i in pos..perm.len() {
            perm.swap(pos, i);
            if rec(pos + 1, perm, f) {
                return true;
            }
            perm.swap(pos, i);
        }
        false
    }
    let mut perm: Vec<usize> = (0..k).collect();
    rec(0, &mut perm, f);
}

/// Equivalence under `B_n` and column reordering, by trying every column
/// order of `p2` and confirming an explicit group element.
pub fn equivalent(p1: &BinaryMatrixRep, p2: &BinaryMatrixRep) -> Result<bool, Error> {
    equivalent_capped(p1, p2, DEFAULT_FACTORIAL_CAP)
}

pub fn equivalent_capped(p1: &BinaryMatrixRep, p2: &BinaryMatrixRep, cap: usize) -> Result<bool, Error> {
    check_shape(p1, p2)?;
    check_cap("column count", p1.k(), cap)?;
    let mut found = false;
    for_each_permutation(p1.k(), &mut |order| {
        let q = p2.permute_columns(order).expect("valid permutation");
        if signed_row_equivalent(p1, &q).unwrap_or(false) && row_witness(p1, &q).is_some() {
            found = true;
        }
        found
    });
    Ok(found)
}

/// Branch-and-bound search for the lexicographically least sequence of
/// column labels over all row permutations, row complementations and column
/// orders with a zero first column.
struct Search {
    best: Vec<u32>,
    abort_on_smaller: bool,
    aborted: bool,
}

impl Search {
    fn run(&mut self, n: usize, cols: &[u32]) {
        let all_rows = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        for (j, &origin) in cols.iter().enumerate() {
            let mut rest: Vec<u32> = cols
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &c)| c ^ origin)
                .collect();
            self.dfs(&mut rest, 0, &[all_rows]);
            if self.aborted {
                return;
            }
        }
    }

    fn dfs(&mut self, rest: &mut [u32], depth: usize, groups: &[u32]) {
        if rest.is_empty() {
            return;
        }
        let label = |x: u32| -> u32 {
            let mut start = 0;
            let mut out = 0;
            for &g in groups {
                let ones = (g & x).count_ones();
                out |= ((1u32 << ones) - 1) << start;
                start += g.count_ones();
            }
            out
        };
        let labels: Vec<u32> = rest.iter().map(|&x| label(x)).collect();
        let m = *labels.iter().min().expect("nonempty");
        if m > self.best[depth] {
            return;
        }
        if m < self.best[depth] {
            if self.abort_on_smaller {
                self.aborted = true;
                return;
            }
            self.best[depth] = m;
            for b in &mut self.best[depth + 1..] {
                *b = u32::MAX;
            }
        }
        for i in 0..rest.len() {
            if labels[i] != m {
                continue;
            }
            let x = rest[i];
            let mut next = Vec::with_capacity(groups.len() * 2);
            for &g in groups {
                for part in [g & x, g & !x] {
                    if part != 0 {
                        next.push(part);
                    }
                }
            }
            rest.swap(0, i);
            self.dfs(&mut rest[1..], depth + 1, &next);
            rest.swap(0, i);
            if self.aborted {
                return;
            }
        }
    }
}

/// The minimal matrix representation: first column zero, column labels
/// strictly increasing, and lexicographically least among all equivalent
/// matrices.
pub fn canonical(p: &BinaryMatrixRep) -> Result<BinaryMatrixRep, Error> {
    canonical_capped(p, DEFAULT_FACTORIAL_CAP)
}

pub fn canonical_capped(p: &BinaryMatrixRep, cap: usize) -> Result<BinaryMatrixRep, Error> {
    check_cap("column count", p.k(), cap)?;
    let mut s = Search {
        best: vec![u32::MAX; p.k() - 1],
        abort_on_smaller: false,
        aborted: false,
    };
    s.run(p.n, &p.columns);
    let mut columns = vec![0];
    columns.extend(s.best);
    Ok(BinaryMatrixRep { n: p.n, columns })
}

/// Whether `p` is its own minimal representation. Stops at the first
/// equivalent matrix that is strictly smaller.
pub fn is_minimal(p: &BinaryMatrixRep) -> Result<bool, Error> {
    is_minimal_capped(p, DEFAULT_FACTORIAL_CAP)
}

pub fn is_minimal_capped(p: &BinaryMatrixRep, cap: usize) -> Result<bool, Error> {
    check_cap("column count", p.k(), cap)?;
    if p.columns[0] != 0 || p.columns.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(false);
    }
    Ok(is_minimal_labels(p.n, &p.columns[1..]))
}

/// Minimality test on the nonzero labels of a candidate representation whose
/// zero column is implicit. The labels must be strictly increasing.
pub(crate) fn is_minimal_labels(n: usize, labels: &[u32]) -> bool {
    let mut cols = Vec::with_capacity(labels.len() + 1);
    cols.push(0);
    cols.extend_from_slice(labels);
    let mut s = Search {
        best: labels.to_vec(),
        abort_on_smaller: true,
        aborted: false,
    };
    s.run(n, &cols);
    !s.aborted
}

/// The number `sum 2^x` over the vertex labels `x`.
pub fn polytope_number(labels: &[u32], n: usize) -> Result<BigUint, Error> {
    let mut out = BigUint::default();
    for &x in labels {
        if (x as u64) >> n != 0 {
            return Err(Error::Invalid(format!("label {x} is not a vertex of I^{n}")));
        }
        out.set_bit(x as u64, true);
    }
    Ok(out)
}
