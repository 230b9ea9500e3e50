//! Extending systems, their axioms, and the products built from them.

mod extension;
mod system;
mod twisted;

pub use extension::{canonical_extending_system, phi_iso_check, Extension};
pub use system::{
    semidirect_product, semidirect_system, skew_crossed_product, unified_product, Axiom, AxiomCheck,
    AxiomReport, ExtendingSystem, SystemKind,
};
pub use twisted::{single_extension, single_extension_system, twisted_derivation_check, TwistedDerivation};
