use alloc::string::String;
use alloc::vec::Vec;

use crate::model::Vertex;

/// What a reduction or composition produced: sizes on both sides and the
/// naming of every output vertex (or variable).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub name: String,
    pub input_size: usize,
    pub output_vertices: u32,
    pub output_edges: usize,
    /// `(name, index)` pairs; names are unique and indices are unique.
    pub names: Vec<(String, Vertex)>,
    /// Extra integer facts (e.g. the dominating-set budget).
    pub facts: Vec<(String, u64)>,
}

impl ReductionTrace {
    pub fn new(name: &str) -> Self {
        ReductionTrace {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn name_vertex(&mut self, name: String, index: Vertex) {
        self.names.push((name, index));
    }

    pub fn fact(&self, key: &str) -> Option<u64> {
        self.facts.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn lookup(&self, name: &str) -> Option<Vertex> {
        self.names.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// Names and indices are both duplicate-free.
    pub fn is_injective(&self) -> bool {
        let mut names: Vec<&str> = self.names.iter().map(|(n, _)| n.as_str()).collect();
        let mut idx: Vec<Vertex> = self.names.iter().map(|&(_, v)| v).collect();
        names.sort_unstable();
        idx.sort_unstable();
        let before = (names.len(), idx.len());
        names.dedup();
        idx.dedup();
        before == (names.len(), idx.len())
    }
}
