//! Exact counting and enumeration of 0/1-polytopes and acute 0/1-simplices
//! in the unit cube, modulo the hyperoctahedral group.
//!
//! Vertices of `I^n` are identified with their labels `sum x_i 2^(i-1)`, so a
//! coordinate complement is an exclusive-or and a coordinate permutation is a
//! bit shuffle. Everything that can outgrow 64 bits is a big integer.

pub mod acute_enum;
pub mod binmat;
pub mod combinatorics;
pub mod exactgram;
pub mod hessenberg;
pub mod hyperoct;
pub mod polya;
pub mod triangles;

use thiserror::Error;

/// Largest cube dimension for which vertex-level work is attempted.
pub const DEFAULT_DIMENSION_CAP: usize = 16;
/// Largest column count accepted by the factorial-cost matrix routines.
pub const DEFAULT_FACTORIAL_CAP: usize = 10;
/// Largest dimension the acute census runs for unless raised explicitly.
pub const DEFAULT_ACUTE_CAP: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{what} {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<(), Error> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
