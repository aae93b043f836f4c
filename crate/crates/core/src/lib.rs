//! Balanced simplicial cell complexes encoded by edge-colored multigraphs.
//!
//! The library builds rank-`d` simplicial cell complexes from multigraphs whose
//! edges carry colors in `1..=d`, and certifies their combinatorial and
//! topological invariants by exact computation: f/h/h'-vectors, reduced Betti
//! numbers over the rationals and prime fields, Cohen-Macaulay and Buchsbaum
//! verdicts, graphical and CW shellings, and a synthesizer that realizes a
//! prescribed Betti profile with the minimal h'-vector.

pub mod color;
pub mod complex;
pub mod constructions;
pub mod field;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod shelling;

pub use color::{Color, ColorSet};
pub use complex::{CellComplex, FaceId};
pub use field::FieldSpec;
pub use graph::ColoredMultigraph;
