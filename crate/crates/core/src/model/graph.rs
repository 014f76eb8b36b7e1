use alloc::vec::Vec;

use super::error::ModelError;
use super::Vertex;

/// Undirected simple graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    num_vertices: u32,
    edges: Vec<(Vertex, Vertex)>,
}

fn check_endpoint(v: Vertex, n: u32) -> Result<(), ModelError> {
    if v == 0 || v > n {
        Err(ModelError::OutOfRange { index: v, bound: n })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn new(num_vertices: u32, edges: Vec<(Vertex, Vertex)>) -> Result<Self, ModelError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            check_endpoint(u, num_vertices)?;
            check_endpoint(v, num_vertices)?;
            if u == v {
                return Err(ModelError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Graph {
            num_vertices,
            edges: normalized,
        })
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Sorted neighbor lists; entry `v - 1` belongs to vertex `v`.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = alloc::vec![Vec::new(); self.num_vertices as usize];
        for &(u, v) in &self.edges {
            adj[u as usize - 1].push(v);
            adj[v as usize - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Whether the vertices of `set` induce a connected subgraph. The empty
    /// set counts as connected.
    pub fn induces_connected(&self, set: &[Vertex]) -> bool {
        let Some(&first) = set.first() else {
            return true;
        };
        let n = self.num_vertices as usize;
        let mut inside = alloc::vec![false; n];
        for &v in set {
            inside[v as usize - 1] = true;
        }
        let adj = self.adjacency();
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![first];
        seen[first as usize - 1] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v as usize - 1] {
                let w_idx = w as usize - 1;
                if inside[w_idx] && !seen[w_idx] {
                    seen[w_idx] = true;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        count == distinct
    }
}

/// Directed graph without self-loops. Arcs sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    num_vertices: u32,
    arcs: Vec<(Vertex, Vertex)>,
}

impl Digraph {
    pub fn new(num_vertices: u32, mut arcs: Vec<(Vertex, Vertex)>) -> Result<Self, ModelError> {
        for &(u, v) in &arcs {
            check_endpoint(u, num_vertices)?;
            check_endpoint(v, num_vertices)?;
            if u == v {
                return Err(ModelError::SelfLoop(u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Digraph { num_vertices, arcs })
    }

    /// Both orientations of every edge.
    pub fn symmetric(g: &Graph) -> Self {
        let arcs = g
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        Digraph::new(g.num_vertices(), arcs).expect("graph edges are valid arcs")
    }

    pub fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Sorted out-neighbor lists, indexed by `v - 1`.
    pub fn out_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = alloc::vec![Vec::new(); self.num_vertices as usize];
        for &(u, v) in &self.arcs {
            adj[u as usize - 1].push(v);
        }
        adj
    }

    /// Sorted in-neighbor lists, indexed by `v - 1`.
    pub fn in_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = alloc::vec![Vec::new(); self.num_vertices as usize];
        for &(u, v) in &self.arcs {
            adj[v as usize - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::new(2, vec![(1, 1)]), Err(ModelError::SelfLoop(1)));
        assert_eq!(Digraph::new(2, vec![(2, 2)]), Err(ModelError::SelfLoop(2)));
    }

    #[test]
    fn edges_canonicalized() {
        let g = Graph::new(3, vec![(3, 1), (1, 3), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);
        assert!(g.has_edge(3, 1));
    }

    #[test]
    fn connectivity_of_induced_sets() {
        let g = Graph::new(4, vec![(1, 2), (2, 3)]).unwrap();
        assert!(g.induces_connected(&[1, 2, 3]));
        assert!(!g.induces_connected(&[1, 3]));
        assert!(g.induces_connected(&[]));
    }
}
