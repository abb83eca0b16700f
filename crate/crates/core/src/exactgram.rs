//! Exact integer Gramians: determinant, adjugate, acuteness and strict
//! ultrametricity, plus the test deciding whether one more vertex keeps a
//! simplex acute.
//!
//! With `D = det(G) > 0` the inverse is `adj(G) / D`, so every sign
//! condition on `G^{-1}` is checked on the adjugate and no fraction is ever
//! formed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binmat::BinaryMatrixRep;
use crate::Error;

pub type IntMatrix = Vec<Vec<BigInt>>;

fn square(m: &[Vec<BigInt>]) -> Result<usize, Error> {
    let k = m.len();
    if m.iter().any(|r| r.len() != k) {
        return Err(Error::Invalid("matrix is not square".into()));
    }
    Ok(k)
}

/// Determinant by fraction-free elimination.
pub fn det(m: &[Vec<BigInt>]) -> Result<BigInt, Error> {
    let k = square(m)?;
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let v = &a[c][c] * &a[r][j] - &a[r][c] * &a[c][j];
                a[r][j] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    Ok(sign * prev)
}

/// Determinant by cofactor expansion along the first row. Exponential; kept
/// as an independent check on small matrices.
pub fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: IntMatrix = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn minor(m: &[Vec<BigInt>], skip_r: usize, skip_c: usize) -> IntMatrix {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != skip_r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != skip_c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Determinant and adjugate. Nonsingular input goes through fraction-free
/// Gauss-Jordan on `[M | I]`; a singular one falls back to cofactors.
pub fn det_adj(m: &[Vec<BigInt>]) -> Result<(BigInt, IntMatrix), Error> {
    let k = square(m)?;
    if k == 0 {
        return Ok((BigInt::one(), Vec::new()));
    }
    let mut a: IntMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    let mut singular = false;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            singular = true;
            break;
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c {
                continue;
            }
            let f = row[c].clone();
            for j in 0..2 * k {
                if j == c {
                    continue;
                }
                row[j] = (&pivot_row[c] * &row[j] - &f * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        // Rows above the pivot were scaled by the new pivot and divided by
        // the old one as well, which keeps the whole left block at a common
        // scale `prev`.
        prev = pivot_row[c].clone();
    }
    if singular {
        let mut adj = vec![vec![BigInt::zero(); k]; k];
        for (i, row) in adj.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let d = det(&minor(m, j, i))?;
                *x = if (i + j) % 2 == 0 { d } else { -d };
            }
        }
        return Ok((BigInt::zero(), adj));
    }
    let adj: IntMatrix = a
        .into_iter()
        .map(|row| row[k..].iter().map(|x| &sign * x).collect())
        .collect();
    let d = sign * prev;
    debug_assert!(verify_adjugate(m, &d, &adj));
    Ok((d, adj))
}

/// `M * adj = det * I`.
pub fn verify_adjugate(m: &[Vec<BigInt>], d: &BigInt, adj: &[Vec<BigInt>]) -> bool {
    let k = m.len();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let s: BigInt = (0..k).map(|l| &m[i][l] * &adj[l][j]).sum();
            if i == j {
                s == *d
            } else {
                s.is_zero()
            }
        })
    })
}

/// The Gramian `P^T P` of a set of column labels.
pub fn gram_of_labels(labels: &[u32]) -> Vec<Vec<i64>> {
    labels
        .iter()
        .map(|&a| labels.iter().map(|&b| (a & b).count_ones() as i64).collect())
        .collect()
}

fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// A Gramian with its exact determinant and adjugate.
#[derive(Clone, Debug)]
pub struct ExactGramian {
    entries: Vec<Vec<i64>>,
    det: BigInt,
    adj: IntMatrix,
    /// Determinant and adjugate again as machine integers when they fit in
    /// 32 bits, so products of two of them cannot overflow `i128`.
    small: Option<(i128, Vec<Vec<i128>>)>,
}

impl ExactGramian {
    #[allow(clippy::needless_range_loop)]
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, Error> {
        let k = entries.len();
        for i in 0..k {
            if entries[i].len() != k {
                return Err(Error::Invalid("Gramian is not square".into()));
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Invalid("Gramian is not symmetric".into()));
                }
            }
        }
        let (det, adj) = det_adj(&to_big(&entries))?;
        let fits = |x: &BigInt| x.to_i32().map(i128::from);
        let small = fits(&det).zip(adj.iter()
                .map(|r| r.iter().map(fits).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>());
        Ok(ExactGramian {
            entries,
            det,
            adj,
            small,
        })
    }

    pub fn of_labels(labels: &[u32]) -> Self {
        Self::new(gram_of_labels(labels)).expect("Gramians are symmetric")
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn adj(&self) -> &IntMatrix {
        &self.adj
    }

    /// Inverse off-diagonal entries negative and row sums positive.
    pub fn has_acute_inverse(&self) -> bool {
        if !self.det.is_positive() {
            return false;
        }
        let k = self.k();
        (0..k).all(|i| {
            let row_sum: BigInt = self.adj[i].iter().sum();
            row_sum.is_positive() && (0..k).all(|j| i == j || self.adj[i][j].is_negative())
        })
    }
}

/// Whether the simplex spanned by the origin and the given nonzero columns
/// is acute.
pub fn is_acute_labels(labels: &[u32]) -> bool {
    ExactGramian::of_labels(labels).has_acute_inverse()
}

/// Acuteness of a matrix representation. A zero column, if present, is
/// taken as the origin; otherwise the first column is moved to the origin,
/// which preserves all angles.
pub fn is_acute(p: &BinaryMatrixRep) -> bool {
    let origin = if p.columns().contains(&0) { 0 } else { p.columns()[0] };
    let labels: Vec<u32> = p
        .columns()
        .iter()
        .map(|&c| c ^ origin)
        .filter(|&c| c != 0)
        .collect();
    labels.len() <= p.n() && is_acute_labels(&labels)
}

/// Strict ultrametricity: in every triple of indices the smallest of the
/// three off-diagonal entries occurs at least twice, and every diagonal
/// entry exceeds all off-diagonal entries of its row.
#[allow(clippy::needless_range_loop)]
pub fn is_strictly_ultrametric(g: &[Vec<i64>]) -> Result<bool, Error> {
    let k = g.len();
    for i in 0..k {
        if g[i].len() != k {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        for j in 0..i {
            if g[i][j] != g[j][i] {
                return Err(Error::Invalid("matrix is not symmetric".into()));
            }
        }
    }
    for i in 0..k {
        if g[i][i] < 0 || (0..k).any(|j| j != i && (g[i][j] < 0 || g[i][j] >= g[i][i])) {
            return Ok(false);
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let mut t = [g[i][j], g[j][l], g[i][l]];
                t.sort_unstable();
                if t[0] != t[1] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    /// Adding the vertex as it stands gives an acute simplex.
    Acute,
    /// Acute once lifted with at least this many ones in fresh coordinates.
    Candidate(usize),
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionVerdict {
    pub kind: ExtensionKind,
    /// `adj(G) P^T v`.
    pub y: Vec<BigInt>,
    pub det: BigInt,
}

/// Sign tests for the Gramian bordered by a new vertex with `P^T v = g`,
/// `y = adj(G) g` and squared length `gamma`. Returns the least number of
/// extra ones `m <= max_extra` that makes the bordered simplex acute.
///
/// Writing `sigma = D * (gamma + m) - g.y`, the bordered inverse is acute iff
/// `y > 0`, `sum(y) < D`, `sigma * adj_ij + y_i y_j < 0` off the diagonal and
/// `sigma * (adj e)_i + y_i (sum(y) - D) > 0`. The last two only get easier
/// as `m` grows.
fn least_extra<T>(adj: &[Vec<T>], d: &T, g: &[T], y: &[T], gamma: T, max_extra: usize) -> Option<usize>
where
    T: Integer + Signed + Clone + From<i32>,
{
    let k = y.len();
    if !y.iter().all(|x| x.is_positive()) {
        return None;
    }
    let sum_y = y.iter().fold(T::zero(), |a, b| a + b.clone());
    if sum_y >= *d {
        return None;
    }
    let gy = g.iter().zip(y).fold(T::zero(), |a, (p, q)| a + p.clone() * q.clone());
    let row_sums: Vec<T> = adj.iter().map(|r| r.iter().fold(T::zero(), |a, b| a + b.clone())).collect();
    let slack = sum_y - d.clone();
    for m in 0..=max_extra {
        let sigma = d.clone() * (gamma.clone() + T::from(m as i32)) - gy.clone();
        if !sigma.is_positive() {
            continue;
        }
        let off = (0..k).all(|i| {
            (0..k).all(|j| i == j || (sigma.clone() * adj[i][j].clone() + y[i].clone() * y[j].clone()).is_negative())
        });
        let rows = (0..k).all(|i| (sigma.clone() * row_sums[i].clone() + y[i].clone() * slack.clone()).is_positive());
        if off && rows {
            return Some(m);
        }
    }
    None
}

/// Fast check used by the census: does adding `v` (already in the same cube
/// as `labels`) keep the simplex acute?
pub fn extends_acutely(gram: &ExactGramian, labels: &[u32], v: u32) -> bool {
    let g: Vec<i64> = labels.iter().map(|&c| (c & v).count_ones() as i64).collect();
    let gamma = v.count_ones() as i64;
    if let Some((d, adj)) = &gram.small {
        let g: Vec<i128> = g.iter().map(|&x| x as i128).collect();
        let y: Vec<i128> = adj.iter().map(|r| r.iter().zip(&g).map(|(a, b)| a * b).sum()).collect();
        least_extra(adj, d, &g, &y, gamma as i128, 0) == Some(0)
    } else {
        let g: Vec<BigInt> = g.into_iter().map(BigInt::from).collect();
        let y = mat_vec(&gram.adj, &g);
        least_extra(&gram.adj, &gram.det, &g, &y, BigInt::from(gamma), 0) == Some(0)
    }
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Candidate test of a vertex `v` against a simplex (origin plus `labels`):
/// whether it projects into the interior of the simplex, expressed as `y > 0`
/// and `sum(y) < det`.
pub fn is_candidate(gram: &ExactGramian, labels: &[u32], v: u32) -> bool {
    let g: Vec<BigInt> = labels.iter().map(|&c| BigInt::from((c & v).count_ones())).collect();
    let y = mat_vec(&gram.adj, &g);
    gram.det.is_positive() && y.iter().all(|x| x.is_positive()) && y.iter().sum::<BigInt>() < gram.det
}

/// Classifies `v` as an extension of the simplex with columns `p` (a zero
/// column is ignored). `Candidate(m)` reports the least number of ones `m`
/// in `extra_dims` or fewer fresh coordinates that makes the lifted vertex
/// acute.
pub fn classify_extension(p: &BinaryMatrixRep, v: u32, extra_dims: usize) -> Result<ExtensionVerdict, Error> {
    if v == 0 || p.columns().contains(&v) {
        return Err(Error::Invalid(format!("vertex {v} is the origin or already a column")));
    }
    if (v as u64) >> p.n() != 0 {
        return Err(Error::Invalid(format!("label {v} is not a vertex of I^{}", p.n())));
    }
    let labels = p.without_zero();
    let gram = ExactGramian::of_labels(&labels);
    let g: Vec<BigInt> = labels.iter().map(|&c| BigInt::from((c & v).count_ones())).collect();
    let y = mat_vec(&gram.adj, &g);
    let kind = if !gram.det.is_positive() {
        ExtensionKind::Rejected
    } else {
        match least_extra(&gram.adj, &gram.det, &g, &y, BigInt::from(v.count_ones()), extra_dims) {
            Some(0) => ExtensionKind::Acute,
            Some(m) => ExtensionKind::Candidate(m),
            None => ExtensionKind::Rejected,
        }
    };
    Ok(ExtensionVerdict {
        kind,
        y,
        det: gram.det.clone(),
    })
}

/// Every vertex of `I^target` whose addition keeps the simplex (origin plus
/// `labels`, living in `I^ambient`) acute, found by classifying the vertices
/// of `I^ambient` once and lifting: `v + (w << ambient)` is acute exactly
/// when `v` needs at most `popcount(w)` extra ones.
pub fn lifted_acute_extensions(labels: &[u32], ambient: usize, target: usize) -> Vec<u32> {
    let p = {
        let mut cols = vec![0];
        cols.extend_from_slice(labels);
        BinaryMatrixRep::new(ambient, cols).expect("labels fit the ambient cube")
    };
    let extra = target - ambient;
    let mut out = Vec::new();
    for v in 1..(1u32 << ambient) {
        if labels.contains(&v) {
            continue;
        }
        let need = match classify_extension(&p, v, extra).expect("valid vertex").kind {
            ExtensionKind::Acute => 0,
            ExtensionKind::Candidate(m) => m,
            ExtensionKind::Rejected => continue,
        };
        for w in 0..(1u32 << extra) {
            if w.count_ones() as usize >= need {
                out.push(v | (w << ambient));
            }
        }
    }
    out.sort_unstable();
    out
}
