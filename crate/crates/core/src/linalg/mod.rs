//! Exact scalars, dense matrices and canonical subspaces.

mod field;
mod matrix;
mod subspace;

pub use field::{is_reduced, Field, Scalar};
pub use matrix::{Matrix, Rref, Solution};
pub use subspace::{combine, unit, Subspace};

/// Converts integers to scalars of `field`.
pub fn vector(field: Field, values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| field.from_i64(v)).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
