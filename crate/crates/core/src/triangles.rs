//! 0/1-triangles up to symmetry.
//!
//! The minimal representation of a triangle has a zero column and two more
//! columns whose rows, top to bottom, read `a` times `(1,1)`, `b` times
//! `(1,0)`, `c` times `(0,1)` and `d` times `(0,0)`, with `a <= b <= c`.

use serde::{Deserialize, Serialize};

use crate::binmat::BinaryMatrixRep;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriangleShape {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleFilter {
    All,
    Right,
    Acute,
}

impl TriangleShape {
    pub fn n(&self) -> usize {
        self.a + self.b + self.c + self.d
    }

    pub fn is_valid(&self) -> bool {
        self.a + self.b >= 1 && self.a <= self.b && self.b <= self.c
    }

    /// The angle at the origin is right exactly when the two edges share no
    /// coordinate.
    pub fn is_right(&self) -> bool {
        self.a == 0
    }

    pub fn is_acute(&self) -> bool {
        self.a > 0
    }

    /// The two nonzero column labels.
    pub fn labels(&self) -> (u32, u32) {
        let ones = |m: usize| (1u32 << m) - 1;
        let second = ones(self.a + self.b);
        let third = ones(self.a) | (ones(self.c) << (self.a + self.b));
        (second, third)
    }

    pub fn to_matrix(&self) -> Result<BinaryMatrixRep, Error> {
        if !self.is_valid() {
            return Err(Error::Invalid(format!("{self:?} is not a triangle shape")));
        }
        let (s, t) = self.labels();
        BinaryMatrixRep::new(self.n(), vec![0, s, t])
    }
}

/// Every triangle shape in `I^n` passing the filter, in lexicographic
/// `(a, b, c)` order.
pub fn enumerate_triangles(n: usize, filter: TriangleFilter) -> Vec<TriangleShape> {
    let mut out = Vec::new();
    for a in 0..=n / 3 {
        let keep = match filter {
            TriangleFilter::All => true,
            TriangleFilter::Right => a == 0,
            TriangleFilter::Acute => a > 0,
        };
        if !keep {
            continue;
        }
        for b in a.max(1)..=(n - a) / 2 {
            for c in b..=n - a - b {
                out.push(TriangleShape {
                    a,
                    b,
                    c,
                    d: n - a - b - c,
                });
            }
        }
    }
    out
}

pub fn count_right(n: usize) -> u64 {
    let n = n as u64;
    (n / 2) * n.div_ceil(2)
}

pub fn count_acute(n: usize) -> u64 {
    let n = n as u64;
    (2 * n * n * n + 3 * n * n + 9 - 6 * n) / 72
}

/// Number of shapes with `a = r`, for `1 <= r` and `3r <= n`.
pub fn count_with_common(n: usize, r: usize) -> u64 {
    if 3 * r > n {
        return 0;
    }
    let m = (n - 3 * r + 2) as u64;
    (m / 2) * m.div_ceil(2)
}

/// `n,r_n,a_n,d_n` rows for `n` from 2 up to `max_n`.
pub fn table_csv(max_n: usize) -> String {
    let mut s = String::from("n,right,acute,total\n");
    for n in 2..=max_n {
        let (r, a) = (count_right(n), count_acute(n));
        s.push_str(&format!("{n},{r},{a},{}\n", r + a));
    }
    s
}
