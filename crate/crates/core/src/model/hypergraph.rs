use alloc::vec::Vec;

use super::error::ModelError;
use super::Vertex;

/// A hypergraph on vertices `1..=num_vertices`.
///
/// Each edge is a sorted, duplicate-free vertex list. Edge order is
/// significant: the kernel's basis selection prefers earlier edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    num_vertices: u32,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Validates ranges and normalizes each edge (sort + dedup).
    pub fn new(num_vertices: u32, edges: Vec<Vec<Vertex>>) -> Result<Self, ModelError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for mut edge in edges {
            for &v in &edge {
                if v == 0 || v > num_vertices {
                    return Err(ModelError::OutOfRange {
                        index: v,
                        bound: num_vertices,
                    });
                }
            }
            edge.sort_unstable();
            edge.dedup();
            normalized.push(edge);
        }
        Ok(Hypergraph {
            num_vertices,
            edges: normalized,
        })
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Largest edge size (`d`), 0 without edges.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(Vec::is_empty)
    }

    /// Number of edges of each size; index `r` holds the count of size-`r` edges.
    pub fn size_histogram(&self) -> Vec<usize> {
        let mut hist = alloc::vec![0usize; self.max_edge_size() + 1];
        for e in &self.edges {
            hist[e.len()] += 1;
        }
        hist
    }

    /// `coloring[v - 1]` is the color of `v`. An edge is monochromatic when
    /// all its vertices share one color; the empty edge counts as one.
    pub fn is_properly_two_colored(&self, coloring: &[u8]) -> bool {
        coloring.len() == self.num_vertices as usize
            && self.edges.iter().all(|e| {
                let mut colors = e.iter().map(|&v| coloring[v as usize - 1]);
                match colors.next() {
                    None => false,
                    Some(first) => colors.any(|c| c != first),
                }
            })
    }
}
