//! Succinct permutation graphs.
//!
//! An ordered permutation graph on `1..=n` is stored as its inverse
//! permutation plus a few bit vectors; adjacency, neighborhoods, exact
//! distances and shortest paths are answered without materializing edges.

pub mod bits;
pub mod core;
pub mod rmq;
pub mod error;
pub mod grid;
pub mod pio;
pub mod cascade;
pub mod pgraph;
pub mod bpgraph;
pub mod cpgraph;
pub mod gen;
pub mod algos;
pub mod semilocal;
pub mod format;
mod ser;

pub use error::{Error, Result};
