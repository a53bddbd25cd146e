//! Exact labelled polyhedra, lattice-point counting and Weyl character
//! combinatorics.

pub mod characters;
pub mod cli;
pub mod counting;
pub mod desingularize;
pub mod error;
pub mod lattice;
pub mod polyhedra;
pub mod random;
pub mod roots;
pub mod subdivision;

pub use error::{Error, Result};
