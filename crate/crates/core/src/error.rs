use std::fmt::Write as _;

use crate::linalg::Scalar;

/// Errors raised by the library.
///
/// "Singular" and "inconsistent" outcomes of linear algebra are ordinary
/// return values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("Jacobi identity fails on basis triple {triple:?}: jacobiator ({})", join(.jacobiator))]
    Jacobi {
        triple: (usize, usize, usize),
        jacobiator: Vec<Scalar>,
    },

    #[error("duplicate bracket entry for basis pair ({0}, {1})")]
    DuplicateEntry(usize, usize),

    #[error("basis index out of range: {0}")]
    BadIndex(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("matrix is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("group closure exceeded the cap of {cap} elements (group too large or infinite)")]
    GroupTooLarge { cap: usize },

    #[error("group order {order} is divisible by the characteristic {characteristic}: modular case unsupported")]
    ModularCase { order: usize, characteristic: u32 },

    #[error("enumeration requires a finite field, got {0}")]
    InfiniteField(String),

    #[error("candidate count {count} exceeds the budget {budget}")]
    BudgetExceeded { count: String, budget: u128 },

    #[error("axiom {axiom} fails on {tuple}")]
    AxiomViolation { axiom: String, tuple: String },

    #[error("element does not generate the group (it has order {order}, the group has {group_order} elements)")]
    NotCyclic { order: usize, group_order: usize },

    #[error("the action is not gamma-abelian")]
    NotGammaAbelian,

    #[error("not a twisted derivation: {0}")]
    NotTwistedDerivation(String),

    #[error("invalid chain: {0}")]
    Chain(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn join(v: &[Scalar]) -> String {
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{x}");
    }
    s
}
