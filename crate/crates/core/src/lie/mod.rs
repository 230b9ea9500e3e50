//! Lie algebras given by structure constants, and a catalog of examples.

pub(crate) mod algebra;
pub mod catalog;

pub use algebra::{flatten, lin, unflatten, BracketEntry, LieAlgebra, StructuralFlags};
