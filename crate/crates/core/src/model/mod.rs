//! Instance universes, certificates and the polynomial-time certificate
//! checkers.

mod certificate;
mod check;
mod cnf;
mod error;
mod graph;
mod hypergraph;
mod structured;

pub use certificate::Certificate;
pub use check::{check_certificate, CheckError, DecisionInstance};
pub use cnf::{Clause, CnfFormula, Literal};
pub use error::ModelError;
pub use graph::{Digraph, Graph};
pub use hypergraph::Hypergraph;
pub use structured::{
    BipartiteHamInstance, EqColRbdsInstance, ListColoringInstance, TsdInstance, PALETTE_A,
    PALETTE_X, PALETTE_Y, PALETTE_Z,
};

/// A 1-indexed vertex (or variable) identifier.
pub type Vertex = u32;
