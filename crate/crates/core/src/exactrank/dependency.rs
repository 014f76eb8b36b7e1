use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exact::{column_vector, Echelon, SparseVec};
use super::{ColumnBasis, InclusionMatrix};

/// Linear dependency `Σ β_i m_i = 0` with `β_target = -1`, over the target
/// column and basis columns only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyCertificate {
    pub r: usize,
    pub target: usize,
    /// `(basis column, β)`, nonzero coefficients only, by column.
    pub coefficients: Vec<(usize, BigRational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DependencyError {
    /// The column is itself a basis column.
    InBasis(usize),
    ColumnOutOfRange(usize),
    /// The dropped column is independent of the basis: the basis is wrong
    /// (a faulty modular run) and must be recomputed exactly.
    Independent(usize),
    /// The claimed basis columns are not linearly independent.
    DependentBasis,
}

impl fmt::Display for DependencyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DependencyError::InBasis(c) => write!(f, "column {c} is a basis column"),
            DependencyError::ColumnOutOfRange(c) => write!(f, "column {c} out of range"),
            DependencyError::Independent(c) => write!(
                f,
                "column {c} is independent of the basis; recompute the basis in exact mode"
            ),
            DependencyError::DependentBasis => f.write_str("basis columns are dependent"),
        }
    }
}

impl DependencyCertificate {
    /// `β` of any column: -1 on the target, 0 off the support.
    pub fn beta(&self, column: usize) -> BigRational {
        if column == self.target {
            return -BigRational::one();
        }
        self.coefficients
            .binary_search_by_key(&column, |(c, _)| *c)
            .map(|pos| self.coefficients[pos].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    /// Columns with nonzero `β`, target included, increasing.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.coefficients.iter().map(|(c, _)| *c).collect();
        s.push(self.target);
        s.sort_unstable();
        s
    }

    /// Per-row zero sums: for every row `A`, `Σ_{e_i ⊇ A} β_i = 0`.
    pub fn verify(&self, m: &InclusionMatrix) -> bool {
        let mut sums = alloc::vec![BigRational::zero(); m.num_rows()];
        for c in self.support() {
            if c >= m.num_columns() {
                return false;
            }
            let b = self.beta(c);
            for &row in m.column_rows(c) {
                sums[row as usize] += &b;
            }
        }
        sums.iter().all(Zero::is_zero)
    }

    /// Both sides of the partition identity
    /// `Σ_{e_i ⊆ V1} β_i = (-1)^r Σ_{e_i ⊆ V2} β_i`, where `in_v1[v - 1]`
    /// marks the vertices of `V1`. Returns `(left, right)`.
    pub fn partition_sums(
        &self,
        m: &InclusionMatrix,
        in_v1: &[bool],
    ) -> (BigRational, BigRational) {
        let mut left = BigRational::zero();
        let mut right = BigRational::zero();
        for c in self.support() {
            let e = m.column_edge(c);
            let side = |want: bool| e.iter().all(|&v| in_v1[v as usize - 1] == want);
            if side(true) {
                left += self.beta(c);
            }
            if side(false) {
                right += self.beta(c);
            }
        }
        if self.r % 2 == 1 {
            right = -right;
        }
        (left, right)
    }

    pub fn identity_holds(&self, m: &InclusionMatrix, in_v1: &[bool]) -> bool {
        let (l, r) = self.partition_sums(m, in_v1);
        l == r
    }
}

impl fmt::Display for DependencyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {} = ", self.target)?;
        for (i, (c, b)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({b})*m{c}")?;
        }
        if self.coefficients.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Expresses column `dropped` in terms of the basis columns by exact
/// elimination with one tag coordinate per participating column.
pub fn dependency_certificate(
    m: &InclusionMatrix,
    basis: &ColumnBasis,
    dropped: usize,
) -> Result<DependencyCertificate, DependencyError> {
    if dropped >= m.num_columns() {
        return Err(DependencyError::ColumnOutOfRange(dropped));
    }
    if basis.contains(dropped) {
        return Err(DependencyError::InBasis(dropped));
    }
    let rows = m.num_rows() as u32;
    let tagged = |col: usize, tag: u32| -> SparseVec {
        let mut v = column_vector(m, col);
        v.push((rows + tag, BigInt::one()));
        v
    };
    let mut ech = Echelon::new(m.num_rows());
    for (slot, &col) in basis.kept.iter().enumerate() {
        if col >= m.num_columns() {
            return Err(DependencyError::ColumnOutOfRange(col));
        }
        if !ech.insert(tagged(col, slot as u32)).0 {
            return Err(DependencyError::DependentBasis);
        }
    }
    let target_tag = rows + basis.kept.len() as u32;
    let (independent, rest) = ech.insert(tagged(dropped, basis.kept.len() as u32));
    if independent {
        return Err(DependencyError::Independent(dropped));
    }
    // rest = c_T e_T + Σ t_j e_j encodes c_T m_T + Σ t_j m_j = 0
    let rest = rest.expect("dependent vectors are returned");
    let (last, head) = rest.split_last().expect("target tag survives");
    debug_assert_eq!(last.0, target_tag);
    let c_t = &last.1;
    let coefficients = head
        .iter()
        .map(|(idx, t)| {
            let slot = (idx - rows) as usize;
            (basis.kept[slot], BigRational::new(-t.clone(), c_t.clone()))
        })
        .collect();
    Ok(DependencyCertificate {
        r: m.r(),
        target: dropped,
        coefficients,
    })
}
