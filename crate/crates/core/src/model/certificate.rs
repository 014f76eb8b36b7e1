use alloc::vec::Vec;

use super::Vertex;

/// A witness for a YES answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `values[i]` is the value of variable `i + 1`.
    Assignment(Vec<bool>),
    /// `colors[v - 1]` is the color of vertex `v`, counted from 1.
    Coloring(Vec<u8>),
    /// Vertex order of a Hamiltonian cycle; the closing edge is implicit.
    HamCycle(Vec<Vertex>),
    /// Vertex order of a Hamiltonian s-t path.
    HamPath(Vec<Vertex>),
    DomSet(Vec<Vertex>),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Assignment(_) => "assignment",
            Certificate::Coloring(_) => "coloring",
            Certificate::HamCycle(_) => "ham-cycle",
            Certificate::HamPath(_) => "ham-path",
            Certificate::DomSet(_) => "dom-set",
        }
    }
}
