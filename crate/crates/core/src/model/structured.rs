//! Instances that carry roles or partitions on top of a graph.

use alloc::format;
use alloc::vec::Vec;

use super::error::{invalid, ModelError};
use super::{Graph, Vertex};

/// Palette color `x` in list-coloring instances.
pub const PALETTE_X: u8 = 1;
pub const PALETTE_Y: u8 = 2;
pub const PALETTE_Z: u8 = 3;
pub const PALETTE_A: u8 = 4;

fn membership(n: u32, groups: &[&[Vertex]]) -> Result<Vec<u8>, ModelError> {
    let mut owner = alloc::vec![0u8; n as usize];
    for (gi, group) in groups.iter().enumerate() {
        for &v in group.iter() {
            if v == 0 || v > n {
                return Err(ModelError::OutOfRange { index: v, bound: n });
            }
            if owner[v as usize - 1] != 0 {
                return Err(invalid(format!("vertex {v} listed twice")));
            }
            owner[v as usize - 1] = gi as u8 + 1;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == 0) {
        return Err(invalid(format!("vertex {} belongs to no part", v + 1)));
    }
    Ok(owner)
}

/// 2-3-coloring instance with a triangle split decomposition: `independent`
/// (X) is edgeless and the remaining vertices split into the listed disjoint
/// triangles, with no edges between different triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsdInstance {
    graph: Graph,
    independent: Vec<Vertex>,
    triangles: Vec<[Vertex; 3]>,
}

impl TsdInstance {
    pub fn new(
        graph: Graph,
        independent: Vec<Vertex>,
        triangles: Vec<[Vertex; 3]>,
    ) -> Result<Self, ModelError> {
        let n = graph.num_vertices();
        let flat: Vec<Vertex> = triangles.iter().flatten().copied().collect();
        membership(n, &[&independent, &flat])?;
        let mut triangle_of = alloc::vec![usize::MAX; n as usize];
        for (ti, tri) in triangles.iter().enumerate() {
            for &v in tri {
                triangle_of[v as usize - 1] = ti;
            }
            for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
                if !graph.has_edge(a, b) {
                    return Err(invalid(format!("triple {tri:?} is not a triangle")));
                }
            }
        }
        for &(u, v) in graph.edges() {
            let (tu, tv) = (triangle_of[u as usize - 1], triangle_of[v as usize - 1]);
            if tu == usize::MAX && tv == usize::MAX {
                return Err(invalid(format!("edge ({u},{v}) inside the independent set")));
            }
            if tu != usize::MAX && tv != usize::MAX && tu != tv {
                return Err(invalid(format!("edge ({u},{v}) joins two triangles")));
            }
        }
        Ok(TsdInstance {
            graph,
            independent,
            triangles,
        })
    }

    /// A fixed instance without 2-3-coloring: a triangle whose three vertices
    /// are all adjacent to one independent vertex.
    pub fn canonical_no() -> Self {
        let g = Graph::new(4, alloc::vec![(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4)])
            .expect("static graph");
        TsdInstance::new(g, alloc::vec![4], alloc::vec![[1, 2, 3]]).expect("static instance")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn independent(&self) -> &[Vertex] {
        &self.independent
    }

    pub fn triangles(&self) -> &[[Vertex; 3]] {
        &self.triangles
    }

    /// Per-vertex color lists as bitmasks: {1,2} on X, {1,2,3} on Y.
    pub fn color_lists(&self) -> Vec<u8> {
        let mut lists = alloc::vec![0b111u8; self.graph.num_vertices() as usize];
        for &x in &self.independent {
            lists[x as usize - 1] = 0b011;
        }
        lists
    }

    /// Class signature used for batching: (triangle count, |X|).
    pub fn signature(&self) -> (usize, usize) {
        (self.triangles.len(), self.independent.len())
    }
}

/// Hamiltonian s-t path on a bipartite graph with |B| = |A| + 1.
/// `b` lists B in order with `b[0] = s` and `b[last] = t`, both of degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteHamInstance {
    graph: Graph,
    a: Vec<Vertex>,
    b: Vec<Vertex>,
}

impl BipartiteHamInstance {
    pub fn new(graph: Graph, a: Vec<Vertex>, b: Vec<Vertex>) -> Result<Self, ModelError> {
        let owner = membership(graph.num_vertices(), &[&a, &b])?;
        if a.is_empty() || b.len() != a.len() + 1 {
            return Err(invalid(format!(
                "need |B| = |A| + 1 with |A| >= 1, got |A| = {}, |B| = {}",
                a.len(),
                b.len()
            )));
        }
        for &(u, v) in graph.edges() {
            if owner[u as usize - 1] == owner[v as usize - 1] {
                return Err(invalid(format!("edge ({u},{v}) inside one side")));
            }
        }
        let adj = graph.adjacency();
        for end in [b[0], b[b.len() - 1]] {
            if adj[end as usize - 1].len() != 1 {
                return Err(invalid(format!("endpoint {end} must have degree 1")));
            }
        }
        Ok(BipartiteHamInstance { graph, a, b })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> &[Vertex] {
        &self.a
    }

    pub fn b(&self) -> &[Vertex] {
        &self.b
    }

    pub fn s(&self) -> Vertex {
        self.b[0]
    }

    pub fn t(&self) -> Vertex {
        self.b[self.b.len() - 1]
    }

    /// (m, n) = (|A|, |B|).
    pub fn signature(&self) -> (usize, usize) {
        (self.a.len(), self.b.len())
    }
}

/// Equal-sized colored red/blue dominating set. Red vertices are split into
/// `k` classes of equal size; every edge joins a red and a blue vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqColRbdsInstance {
    graph: Graph,
    classes: Vec<Vec<Vertex>>,
    blue: Vec<Vertex>,
}

impl EqColRbdsInstance {
    pub fn new(
        graph: Graph,
        classes: Vec<Vec<Vertex>>,
        blue: Vec<Vertex>,
    ) -> Result<Self, ModelError> {
        let red: Vec<Vertex> = classes.iter().flatten().copied().collect();
        let owner = membership(graph.num_vertices(), &[&red, &blue])?;
        let Some(first) = classes.first() else {
            return Err(invalid("need at least one color class"));
        };
        if first.is_empty() || classes.iter().any(|c| c.len() != first.len()) {
            return Err(invalid("color classes must be nonempty and equal-sized"));
        }
        for &(u, v) in graph.edges() {
            if owner[u as usize - 1] == owner[v as usize - 1] {
                return Err(invalid(format!("edge ({u},{v}) does not join R and B")));
            }
        }
        Ok(EqColRbdsInstance {
            graph,
            classes,
            blue,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn blue(&self) -> &[Vertex] {
        &self.blue
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn num_red(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn has_isolated_blue(&self) -> bool {
        let adj = self.graph.adjacency();
        self.blue.iter().any(|&b| adj[b as usize - 1].is_empty())
    }

    /// (|R|, |B|, k).
    pub fn signature(&self) -> (usize, usize, usize) {
        (self.num_red(), self.blue.len(), self.k())
    }
}

/// Graph with a per-vertex list over the palette {x, y, z, a} = {1, 2, 3, 4}.
/// Lists are bitmasks: bit `c - 1` allows color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListColoringInstance {
    graph: Graph,
    lists: Vec<u8>,
}

impl ListColoringInstance {
    pub fn new(graph: Graph, lists: Vec<u8>) -> Result<Self, ModelError> {
        if lists.len() != graph.num_vertices() as usize {
            return Err(invalid("one list per vertex required"));
        }
        if let Some(v) = lists.iter().position(|&l| l == 0 || l > 0b1111) {
            return Err(invalid(format!("list of vertex {} is empty or invalid", v + 1)));
        }
        Ok(ListColoringInstance { graph, lists })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lists(&self) -> &[u8] {
        &self.lists
    }

    /// Bitmask helper: `mask(&[1, 2])` allows colors 1 and 2.
    pub fn mask(colors: &[u8]) -> u8 {
        colors.iter().fold(0, |m, &c| m | (1 << (c - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn triangle_plus_x() -> Graph {
        Graph::new(4, vec![(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn tsd_validates_decomposition() {
        assert!(TsdInstance::new(triangle_plus_x(), vec![4], vec![[1, 2, 3]]).is_ok());
        // vertex 4 in no part
        assert!(TsdInstance::new(triangle_plus_x(), vec![], vec![[1, 2, 3]]).is_err());
        // not a triangle
        let g = Graph::new(4, vec![(1, 2), (2, 3)]).unwrap();
        assert!(TsdInstance::new(g, vec![4], vec![[1, 2, 3]]).is_err());
        // X not independent
        let g = Graph::new(5, vec![(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        assert!(TsdInstance::new(g, vec![4, 5], vec![[1, 2, 3]]).is_err());
    }

    #[test]
    fn bipartite_ham_endpoint_degrees() {
        // b1 - a1 - b2
        let g = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let inst = BipartiteHamInstance::new(g, vec![2], vec![1, 3]).unwrap();
        assert_eq!((inst.s(), inst.t()), (1, 3));
        let g = Graph::new(3, vec![(1, 2)]).unwrap();
        assert!(BipartiteHamInstance::new(g, vec![2], vec![1, 3]).is_err());
    }

    #[test]
    fn rbds_requires_equal_classes() {
        let g = Graph::new(4, vec![(1, 4), (2, 4)]).unwrap();
        assert!(EqColRbdsInstance::new(g.clone(), vec![vec![1], vec![2, 3]], vec![4]).is_err());
        let inst = EqColRbdsInstance::new(g, vec![vec![1, 3], vec![2, 4]], vec![]);
        // edge (2,4) inside R
        assert!(inst.is_err());
    }

    #[test]
    fn list_masks() {
        assert_eq!(ListColoringInstance::mask(&[PALETTE_X, PALETTE_A]), 0b1001);
        let g = Graph::new(1, vec![]).unwrap();
        assert!(ListColoringInstance::new(g, vec![0]).is_err());
    }
}
