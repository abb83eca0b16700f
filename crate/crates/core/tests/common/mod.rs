#![allow(dead_code)]

use acute_cube::hyperoct::{CycleIndexRow, CycleIndexTable, InducedType};
use num_bigint::BigUint;

fn fixture_text(n: usize) -> &'static str {
    match n {
        3 => include_str!("../fixtures/z3.txt"),
        4 => include_str!("../fixtures/z4.txt"),
        5 => include_str!("../fixtures/z5.txt"),
        6 => include_str!("../fixtures/z6.txt"),
        7 => include_str!("../fixtures/z7.txt"),
        8 => include_str!("../fixtures/z8.txt"),
        9 => include_str!("../fixtures/z9.txt"),
        _ => panic!("no printed cycle index for n = {n}"),
    }
}

/// Reads a condensed cycle-index table: one row per line, the count then
/// `length:multiplicity` pairs.
pub fn load_cycle_index(n: usize) -> CycleIndexTable {
    let rows = fixture_text(n)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let count: BigUint = it.next().unwrap().parse().unwrap();
            let mut ty: Vec<(u64, u64)> = it
                .map(|p| {
                    let (a, b) = p.split_once(':').unwrap();
                    (a.parse().unwrap(), b.parse().unwrap())
                })
                .collect();
            ty.sort_unstable();
            CycleIndexRow { count, induced: InducedType(ty) }
        })
        .collect();
    CycleIndexTable { n, rows }
}

/// Polytope counts for k = 0..=2^n, n = 1..=5.
pub const POLYTOPE_ROWS: [&[u64]; 5] = [
    &[1, 1, 1],
    &[1, 1, 2, 1, 1],
    &[1, 1, 3, 3, 6, 3, 3, 1, 1],
    &[1, 1, 4, 6, 19, 27, 50, 56, 74, 56, 50, 27, 19, 6, 4, 1, 1],
    &[
        1, 1, 5, 10, 47, 131, 472, 1326, 3779, 9013, 19963, 38073, 65664, 98804, 133576, 158658,
        169112, 158658, 133576, 98804, 65664, 38073, 19963, 9013, 3779, 1326, 472, 131, 47, 10, 5,
        1, 1,
    ],
];

/// Simplex counts for k = 1..=n+1, n = 1..=8.
pub const SIMPLEX_ROWS: [&[u64]; 8] = [
    &[1, 1],
    &[1, 2, 1],
    &[1, 3, 3, 6],
    &[1, 4, 6, 19, 27],
    &[1, 5, 10, 47, 131, 472],
    &[1, 6, 16, 103, 497, 3253, 19735],
    &[1, 7, 23, 203, 1606, 18435, 221778, 2773763],
    &[1, 8, 32, 373, 4647, 91028, 2074059, 51107344, 1245930065],
];

/// Right, acute and total triangle counts for n = 2..=17.
pub const TRIANGLES_RIGHT: [u64; 16] = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42, 49, 56, 64, 72];
pub const TRIANGLES_ACUTE: [u64; 16] = [0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102, 123, 147];
pub const TRIANGLES_TOTAL: [u64; 16] = [1, 3, 6, 10, 16, 23, 32, 43, 56, 71, 89, 109, 132, 158, 187, 219];

/// Number of acute simplices with n + 1 vertices, n = 3..=9.
pub const ACUTE_COUNTS: [usize; 7] = [1, 1, 2, 6, 13, 29, 67];
pub const MAX_DETS: [u64; 7] = [2, 3, 5, 9, 32, 56, 96];

pub fn det_set(n: usize) -> Vec<u64> {
    match n {
        3 => vec![2],
        4 => vec![3],
        5 => vec![4, 5],
        6 => vec![5, 7, 8, 9],
        7 => vec![6, 9, 10, 11, 12, 13, 14, 24, 32],
        8 => vec![7, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 40, 44, 56],
        9 => {
            let mut v = vec![8, 13, 16, 17];
            v.extend(19..=32);
            v.extend([34, 35, 45, 56, 64, 68, 72, 80, 88, 96]);
            v
        }
        _ => panic!("no determinant set for n = {n}"),
    }
}

/// Minimal representations (nonzero columns) with |det|, n = 3..=7.
pub const GALLERY: &[(usize, &[u32], u64)] = &[
    (3, &[3, 5, 6], 2),
    (4, &[3, 5, 9, 14], 3),
    (5, &[3, 5, 9, 17, 30], 4),
    (5, &[3, 5, 14, 22, 25], 5),
    (6, &[3, 5, 9, 17, 33, 62], 5),
    (6, &[3, 5, 9, 30, 46, 49], 7),
    (6, &[3, 5, 14, 22, 38, 57], 7),
    (6, &[3, 5, 14, 25, 41, 54], 8),
    (6, &[3, 5, 30, 46, 54, 57], 8),
    (6, &[3, 13, 30, 46, 53, 57], 9),
    (7, &[3, 5, 9, 17, 33, 65, 126], 6),
    (7, &[3, 5, 9, 17, 62, 94, 97], 9),
    (7, &[3, 5, 9, 30, 46, 78, 113], 10),
    (7, &[3, 5, 9, 30, 49, 81, 110], 11),
    (7, &[3, 5, 9, 49, 81, 97, 126], 9),
    (7, &[3, 5, 9, 62, 94, 110, 113], 11),
    (7, &[3, 5, 14, 22, 57, 89, 102], 12),
    (7, &[3, 5, 14, 25, 41, 73, 118], 11),
    (7, &[3, 5, 14, 25, 54, 86, 105], 13),
    (7, &[3, 5, 25, 62, 94, 105, 113], 13),
    (7, &[3, 5, 30, 57, 89, 110, 118], 14),
    (7, &[7, 25, 42, 52, 76, 82, 97], 24),
    (7, &[15, 51, 60, 85, 90, 102, 105], 32),
];

/// Maximal-determinant representatives for n = 8 and 9.
pub const MAX_DET_8: &[u32] = &[3, 29, 101, 122, 169, 182, 206, 209];
pub const MAX_DET_9: &[u32] = &[7, 25, 97, 170, 180, 204, 300, 338, 385];

/// Two acute 8-simplices whose Gramians are not ultrametric, with |det|.
pub const NON_ULTRAMETRIC_8: [(&[u32], u64); 2] = [
    (&[3, 5, 30, 121, 185, 217, 238, 246], 22),
    (&[3, 5, 57, 94, 158, 217, 238, 246], 23),
];
