//! Cross-compositions: `t` same-class instances embedded into one instance
//! whose answer is the OR of theirs.
//!
//! Every composition comes with a layout type that maps roles to output
//! vertex indices, and a constructive witness builder that turns a
//! certificate of one input into a certificate of the composed instance.

mod batch;
mod coloring;
mod domset;
mod gadgets;
mod ham;

use core::fmt;

pub use batch::{pad_batch, Batchable, PaddedBatch, RbdsClass};
pub use coloring::{compose_four_coloring, compose_four_list_coloring, FourColoringLayout};
pub use domset::{compose_dominating_set, DomSetLayout, IdAssignment};
pub use gadgets::{GadgetCheck, PathGadget, Treegadget, TriangularGadget};
pub use ham::{compose_hamiltonicity, HamLayout};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComposeError {
    EmptyBatch,
    /// Instance `index` has a different class signature from instance 0.
    MixedClasses { index: usize },
    /// The triangular gadget failed its exhaustive self-check.
    GadgetCheckFailed,
    /// Witness construction was handed an index or certificate that does
    /// not fit the batch.
    BadWitness,
}

impl fmt::Display for ComposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComposeError::EmptyBatch => write!(f, "empty batch"),
            ComposeError::MixedClasses { index } => {
                write!(f, "instance {index} is not in the same class as instance 0")
            }
            ComposeError::GadgetCheckFailed => write!(f, "triangular gadget self-check failed"),
            ComposeError::BadWitness => write!(f, "witness does not fit the batch"),
        }
    }
}
