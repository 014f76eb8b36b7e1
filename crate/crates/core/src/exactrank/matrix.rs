use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::RankError;
use crate::model::{Hypergraph, Vertex};

/// Colexicographic order on equal-length sorted subsets: compare the largest
/// elements first.
pub fn colex_cmp(a: &[Vertex], b: &[Vertex]) -> Ordering {
    a.iter()
        .rev()
        .cmp(b.iter().rev())
        .then_with(|| a.len().cmp(&b.len()))
}

/// Sparse 0/1 inclusion matrix between `(r-1)`-subsets and size-`r` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionMatrix {
    r: usize,
    /// Realized `(r-1)`-subsets in colex order.
    row_keys: Vec<Vec<Vertex>>,
    /// Parent edge index of each column.
    columns: Vec<usize>,
    /// Vertex set of each column's edge.
    column_edges: Vec<Vec<Vertex>>,
    /// Sorted row indices of the nonzero entries of each column.
    column_rows: Vec<Vec<u32>>,
}

fn drop_one(edge: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    (0..edge.len()).map(move |skip| {
        edge.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

impl InclusionMatrix {
    /// Materializes `M_r` for the size-`r` edges of `h`, keeping their order.
    pub fn build(h: &Hypergraph, r: usize) -> Result<Self, RankError> {
        if r == 0 || r > h.num_vertices() as usize {
            return Err(RankError::SizeOutOfRange {
                r,
                n: h.num_vertices(),
            });
        }
        let mut columns = Vec::new();
        let mut column_edges = Vec::new();
        for (i, e) in h.edges().iter().enumerate() {
            if e.len() == r {
                columns.push(i);
                column_edges.push(e.clone());
            }
        }
        let mut row_keys: Vec<Vec<Vertex>> =
            column_edges.iter().flat_map(|e| drop_one(e)).collect();
        row_keys.sort_unstable_by(|a, b| colex_cmp(a, b));
        row_keys.dedup();
        let column_rows = column_edges
            .iter()
            .map(|e| {
                let mut rows: Vec<u32> = drop_one(e)
                    .map(|key| {
                        row_keys
                            .binary_search_by(|probe| colex_cmp(probe, &key))
                            .expect("every subset of an edge is a row") as u32
                    })
                    .collect();
                rows.sort_unstable();
                rows
            })
            .collect();
        Ok(InclusionMatrix {
            r,
            row_keys,
            columns,
            column_edges,
            column_rows,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn num_rows(&self) -> usize {
        self.row_keys.len()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn row_keys(&self) -> &[Vec<Vertex>] {
        &self.row_keys
    }

    /// Parent edge indices, one per column.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn column_edge(&self, column: usize) -> &[Vertex] {
        &self.column_edges[column]
    }

    /// Row indices of the 1-entries of a column, increasing.
    pub fn column_rows(&self, column: usize) -> &[u32] {
        &self.column_rows[column]
    }

    pub fn entry(&self, row: usize, column: usize) -> bool {
        self.column_rows[column]
            .binary_search(&(row as u32))
            .is_ok()
    }
}

impl fmt::Display for InclusionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "M_{}: {} rows x {} columns (edges {:?})",
            self.r,
            self.num_rows(),
            self.num_columns(),
            self.columns
        )?;
        for (i, key) in self.row_keys.iter().enumerate() {
            write!(f, "{key:?}\t")?;
            for j in 0..self.num_columns() {
                f.write_str(if self.entry(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn colex_orders_by_largest_element() {
        let mut subsets = vec![vec![1, 3], vec![2, 3], vec![1, 2], vec![1, 4]];
        subsets.sort_by(|a, b| colex_cmp(a, b));
        assert_eq!(subsets, vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4]]);
    }

    #[test]
    fn triangle_incidence() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let m = InclusionMatrix::build(&h, 2).unwrap();
        assert_eq!(m.row_keys(), &[vec![1], vec![2], vec![3]]);
        assert_eq!(m.column_rows(0), &[0, 1]);
        assert_eq!(m.column_rows(1), &[1, 2]);
        assert_eq!(m.column_rows(2), &[0, 2]);
    }

    #[test]
    fn single_three_edge() {
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        let m = InclusionMatrix::build(&h, 3).unwrap();
        assert_eq!(m.row_keys(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(m.num_columns(), 1);
        assert!((0..3).all(|i| m.entry(i, 0)));
    }

    #[test]
    fn size_one_edges_share_the_empty_row() {
        let h = Hypergraph::new(3, vec![vec![2], vec![1, 3], vec![3]]).unwrap();
        let m = InclusionMatrix::build(&h, 1).unwrap();
        assert_eq!(m.row_keys(), &[Vec::<Vertex>::new()]);
        assert_eq!(m.columns(), &[0, 2]);
    }

    #[test]
    fn rank_size_validated() {
        let h = Hypergraph::new(2, vec![]).unwrap();
        assert!(InclusionMatrix::build(&h, 0).is_err());
        assert!(InclusionMatrix::build(&h, 3).is_err());
    }

    #[test]
    fn each_edge_contributes_r_rows() {
        let h = Hypergraph::new(5, vec![vec![1, 2, 3], vec![2, 3, 4], vec![1, 4, 5]]).unwrap();
        let m = InclusionMatrix::build(&h, 3).unwrap();
        for j in 0..3 {
            assert_eq!(m.column_rows(j).len(), 3);
        }
        // {2,3} shared by the first two edges
        assert_eq!(m.num_rows(), 8);
    }
}
