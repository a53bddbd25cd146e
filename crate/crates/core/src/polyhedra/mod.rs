//! Labelled polyhedra, their open faces and the excess stratification.

pub mod catalog;
mod excess;
mod faces;
pub mod format;
mod label;
mod polyhedron;

pub use excess::{
    is_simple, is_simply_laced, minimalize, structure_group_order, ExcessDecomposition, Piece,
};
pub use faces::{face_lattice, Face, FaceLattice};
pub use label::Label;
pub use polyhedron::{Generators, LabelledPolyhedron, MAX_DIM, MAX_LABELS};
