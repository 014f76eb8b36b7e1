//! Fraction-free sparse elimination over arbitrary-precision integers.
//!
//! Vectors live in an index space whose first `num_rows` coordinates are
//! matrix rows; any coordinates beyond that are bookkeeping tags that ride
//! along with the arithmetic and never act as pivots. Every stored vector is
//! kept primitive (content 1), which stops coefficient growth between steps.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::InclusionMatrix;

pub(super) type SparseVec = Vec<(u32, BigInt)>;

pub(super) struct Echelon {
    num_rows: u32,
    /// `(pivot row, vector)`; each vector is zero at every earlier pivot.
    rows: Vec<(u32, SparseVec)>,
}

fn lookup(v: &SparseVec, idx: u32) -> Option<&BigInt> {
    v.binary_search_by_key(&idx, |&(i, _)| i)
        .ok()
        .map(|pos| &v[pos].1)
}

/// `a * w - b * v`, dropping cancelled entries.
fn combine(a: &BigInt, w: &SparseVec, b: &BigInt, v: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(w.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < w.len() || j < v.len() {
        let wi = w.get(i).map(|e| e.0);
        let vj = v.get(j).map(|e| e.0);
        let (idx, val) = match (wi, vj) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
                (x, a * &w[i - 1].1 - b * &v[j - 1].1)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, a * &w[i - 1].1)
            }
            (Some(x), None) => {
                i += 1;
                (x, a * &w[i - 1].1)
            }
            (_, Some(y)) => {
                j += 1;
                (y, -(b * &v[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

/// Divides out the content so the gcd of the entries is 1.
fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, x) in v.iter_mut() {
        *x /= &g;
    }
}

impl Echelon {
    pub(super) fn new(num_rows: usize) -> Self {
        Echelon {
            num_rows: num_rows as u32,
            rows: Vec::new(),
        }
    }

    fn pivot_of(&self, v: &SparseVec) -> Option<u32> {
        v.first().map(|e| e.0).filter(|&i| i < self.num_rows)
    }

    /// Eliminates every stored pivot from `w`, in insertion order.
    pub(super) fn reduce(&self, mut w: SparseVec) -> SparseVec {
        for (p, v) in &self.rows {
            let Some(c) = lookup(&w, *p) else { continue };
            let lead = lookup(v, *p).expect("pivot entry present");
            let g = lead.gcd(c);
            let (a, b) = (lead / &g, c / &g);
            w = combine(&a, &w, &b, v);
            make_primitive(&mut w);
        }
        w
    }

    /// Reduces `w` and stores it if it has a nonzero matrix-row coordinate.
    /// Returns whether it was independent, together with the reduced vector.
    pub(super) fn insert(&mut self, w: SparseVec) -> (bool, Option<SparseVec>) {
        let mut w = self.reduce(w);
        make_primitive(&mut w);
        match self.pivot_of(&w) {
            Some(p) => {
                self.rows.push((p, w));
                (true, None)
            }
            None => (false, Some(w)),
        }
    }
}

pub(super) fn column_vector(m: &InclusionMatrix, column: usize) -> SparseVec {
    m.column_rows(column)
        .iter()
        .map(|&r| (r, BigInt::one()))
        .collect()
}

pub(super) fn greedy_basis(m: &InclusionMatrix) -> Vec<usize> {
    let mut ech = Echelon::new(m.num_rows());
    (0..m.num_columns())
        .filter(|&j| ech.insert(column_vector(m, j)).0)
        .collect()
}
