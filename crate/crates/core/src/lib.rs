//! Exact computations with finite-dimensional Lie algebras given by structure
//! constants over the rationals or a prime field.
//!
//! The crate covers extending systems and the products built from them,
//! finite group actions by automorphisms (invariants, Reynolds operator,
//! Hilbert 90, Artin reconstruction), and Galois groups `Gal(h/g)` of
//! extensions, enumerated over small prime fields by two independent methods.

#![allow(clippy::needless_range_loop)]

pub mod actions;
pub mod corpus;
pub mod error;
pub mod format;
pub mod galois;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod products;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Solution, Subspace};
pub use lie::LieAlgebra;
pub use par::Parallelism;
