//! File formats, the verification harness and the command line for
//! `sparsekit-core`.

pub mod cli;
pub mod formats;
pub mod harness;
pub mod stats;
