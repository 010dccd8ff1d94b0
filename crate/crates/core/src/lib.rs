//! Minimal generating sets for monoids of matrices over semirings.
//!
//! The crate computes, filters, and verifies minimal generating sets for
//! several families of matrix monoids:
//!
//! - the full boolean matrix monoid and its reflexive, Hall, triangular,
//!   and gossip submonoids ([`boolmat`], [`breen`], [`primes`], [`genset`]);
//! - 2×2 matrices over thresholded min-plus and max-plus semirings
//!   ([`tropical`]);
//! - k×k matrices over Z/nZ relative to their group of units ([`zn`]).
//!
//! Everything is certified at desk scale against the brute-force closure
//! oracle in [`engine`].

pub mod bitgrid;
pub mod boolmat;
pub mod breen;
pub mod canonical;
pub mod engine;
pub mod genset;
pub mod perm;
pub mod primes;
pub mod tropical;
pub mod zn;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dimension {0} out of range (1..={1})")]
    DimensionOutOfRange(usize, usize),
    #[error("value {0} out of range for {1} bits")]
    ValueOutOfRange(u64, usize),
    #[error("matrix is not reduced; canonical form is only defined on reduced matrices")]
    NotReduced,
    #[error("matrix is not reflexive")]
    NotReflexive,
    #[error("matrix is not row-trim")]
    NotRowTrim,
    #[error("permutation matrix present in filter input")]
    PermutationInFilterInput,
    #[error("semiring mismatch: {0}")]
    SemiringMismatch(String),
    #[error("threshold must be at least 1")]
    ThresholdZero,
    #[error("modulus must be at least 2")]
    ModulusTooSmall,
    #[error("closure cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
