//! Sparsification kernel for hypergraph 2-colorability and NAE-SAT, together
//! with the problem reductions, OR-cross-compositions and exact decision
//! oracles used to certify them on small instances.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches files,
//! clocks or the command line lives in the `sparsekit` companion crate.
//!
//! Vertices and variables are 1-indexed throughout, following DIMACS.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod compose;
pub mod exactrank;
pub mod gen;
pub mod kernel;
pub mod model;
pub mod oracle;
pub mod reduce;
pub mod rng;
pub mod trace;

pub use model::{
    check_certificate, BipartiteHamInstance, Certificate, Clause, CnfFormula, DecisionInstance,
    Digraph, EqColRbdsInstance, Graph, Hypergraph, ListColoringInstance, Literal, ModelError,
    TsdInstance, Vertex,
};
pub use trace::ReductionTrace;
