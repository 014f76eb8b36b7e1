//! Subset-inclusion matrices and their greedy-leftmost column bases over the
//! rationals.
//!
//! For edge size `r`, the matrix has one row per `(r-1)`-subset that lies in
//! some size-`r` edge and one column per size-`r` edge; entry `(A, e)` is 1 iff
//! `A ⊆ e`. Rows no edge touches are all-zero and never materialized.
//!
//! Two elimination back ends are provided:
//!
//! * [`RankMode::Exact`] runs fraction-free elimination over arbitrary
//!   precision integers and is always right.
//! * [`RankMode::Modular`] eliminates over `GF(p)` for a prime `p >= 2^61`
//!   drawn from the seed. Its rank never exceeds the rational rank; it can
//!   only disagree with the exact basis when `p` divides one of the
//!   (tiny, for 0/1 matrices of desk size) minors met during elimination.

mod dependency;
mod exact;
mod matrix;
mod modular;

pub use dependency::{dependency_certificate, DependencyCertificate, DependencyError};
pub use matrix::{colex_cmp, InclusionMatrix};
pub use modular::{is_prime_u64, random_prime};

use alloc::vec::Vec;
use core::fmt;

/// Elimination back end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    Modular { seed: u64 },
    Exact,
}

impl RankMode {
    pub fn name(&self) -> &'static str {
        match self {
            RankMode::Modular { .. } => "modular",
            RankMode::Exact => "exact",
        }
    }
}

/// Greedy-leftmost column basis: column `j` is kept iff it is not in the span
/// of the kept columns before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBasis {
    pub r: usize,
    /// Column positions (not edge indices), increasing.
    pub kept: Vec<usize>,
    /// Modulus used, for modular runs.
    pub prime: Option<u64>,
}

impl ColumnBasis {
    pub fn rank(&self) -> usize {
        self.kept.len()
    }

    pub fn contains(&self, column: usize) -> bool {
        self.kept.binary_search(&column).is_ok()
    }
}

impl fmt::Display for ColumnBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} rank={} kept={:?}", self.r, self.rank(), self.kept)?;
        if let Some(p) = self.prime {
            write!(f, " mod {p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankError {
    /// The edge size must satisfy `1 <= r <= n`.
    SizeOutOfRange { r: usize, n: u32 },
}

impl fmt::Display for RankError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankError::SizeOutOfRange { r, n } => {
                write!(f, "edge size {r} outside 1..={n}")
            }
        }
    }
}

/// Computes the greedy-leftmost column basis of `m`.
pub fn column_basis(m: &InclusionMatrix, mode: RankMode) -> ColumnBasis {
    match mode {
        RankMode::Exact => ColumnBasis {
            r: m.r(),
            kept: exact::greedy_basis(m),
            prime: None,
        },
        RankMode::Modular { seed } => {
            let p = random_prime(seed);
            ColumnBasis {
                r: m.r(),
                kept: modular::greedy_basis(m, p),
                prime: Some(p),
            }
        }
    }
}
