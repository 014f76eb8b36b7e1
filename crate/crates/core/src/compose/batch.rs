use alloc::vec::Vec;
use core::fmt::Debug;

use super::ComposeError;
use crate::model::{BipartiteHamInstance, EqColRbdsInstance, TsdInstance};

/// Instances that can share a batch when their signatures agree.
pub trait Batchable: Clone {
    type Signature: Clone + Eq + Debug;
    fn class_signature(&self) -> Self::Signature;
}

impl Batchable for TsdInstance {
    /// (triangles, |X|)
    type Signature = (usize, usize);
    fn class_signature(&self) -> Self::Signature {
        self.signature()
    }
}

impl Batchable for BipartiteHamInstance {
    /// (|A|, |B|)
    type Signature = (usize, usize);
    fn class_signature(&self) -> Self::Signature {
        self.signature()
    }
}

/// Equivalence classes of Eq-Col-RBDS inputs: every instance with an
/// isolated blue vertex falls in one class (all of them are NO), the rest
/// are grouped by size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RbdsClass {
    IsolatedBlue,
    Sized { red: usize, blue: usize, k: usize },
}

impl Batchable for EqColRbdsInstance {
    type Signature = RbdsClass;
    fn class_signature(&self) -> RbdsClass {
        if self.has_isolated_blue() {
            RbdsClass::IsolatedBlue
        } else {
            let (red, blue, k) = self.signature();
            RbdsClass::Sized { red, blue, k }
        }
    }
}

/// Inputs padded to `t = q^2` instances, `q` a power of two and at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedBatch<T: Batchable> {
    instances: Vec<T>,
    original_count: usize,
    q: usize,
    signature: T::Signature,
}

impl<T: Batchable> PaddedBatch<T> {
    pub fn instances(&self) -> &[T] {
        &self.instances
    }

    pub fn original_count(&self) -> usize {
        self.original_count
    }

    pub fn t(&self) -> usize {
        self.instances.len()
    }

    /// `sqrt(t)`.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn log_q(&self) -> usize {
        self.q.trailing_zeros() as usize
    }

    pub fn signature(&self) -> &T::Signature {
        &self.signature
    }

    /// `X_{i,j}` for `i, j` in `1..=q`, stored row by row.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!((1..=self.q).contains(&i) && (1..=self.q).contains(&j));
        &self.instances[(i - 1) * self.q + (j - 1)]
    }

    /// Inverse of [`get`](Self::get): instance position to `(i, j)`.
    pub fn coordinates(&self, index: usize) -> (usize, usize) {
        (index / self.q + 1, index % self.q + 1)
    }
}

/// Pads with copies of the first instance up to the next power of 4 (at
/// least 4, so that `q >= 2`). Duplicates leave the OR unchanged.
pub fn pad_batch<T: Batchable>(instances: Vec<T>) -> Result<PaddedBatch<T>, ComposeError> {
    let first = instances.first().ok_or(ComposeError::EmptyBatch)?;
    let signature = first.class_signature();
    if let Some(pos) = instances.iter().position(|x| x.class_signature() != signature) {
        return Err(ComposeError::MixedClasses { index: pos });
    }
    let original_count = instances.len();
    let mut t = 4;
    while t < original_count {
        t *= 4;
    }
    let mut instances = instances;
    let pad = instances[0].clone();
    instances.resize(t, pad);
    let mut q = 2;
    while q * q < t {
        q *= 2;
    }
    Ok(PaddedBatch {
        instances,
        original_count,
        q,
        signature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn padding_sizes() {
        let tri = TsdInstance::canonical_no();
        for (given, padded, q) in [(1, 4, 2), (3, 4, 2), (4, 4, 2), (5, 16, 4), (17, 64, 8)] {
            let b = pad_batch(vec![tri.clone(); given]).unwrap();
            assert_eq!((b.t(), b.q(), b.original_count()), (padded, q, given));
        }
    }

    #[test]
    fn indexing_is_row_major() {
        let b = pad_batch(vec![TsdInstance::canonical_no(); 16]).unwrap();
        assert_eq!(b.coordinates(5), (2, 2));
        assert_eq!(b.coordinates(4), (2, 1));
        assert_eq!(b.log_q(), 2);
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(pad_batch(Vec::<TsdInstance>::new()), Err(ComposeError::EmptyBatch));
    }
}
