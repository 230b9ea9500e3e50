//! Radical chains `g = h_0 < h_1 < ... < h_m = h` of codimension-one steps.

use super::enumerate::{galois_group_structured, EnumerationOptions};
use crate::error::{Error, Result};
use crate::group::GroupAnalysis;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::products::Extension;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalStep {
    /// `i`, for the extension `h_i / g`.
    pub index: usize,
    pub dim: usize,
    pub group_order: usize,
    /// Whether every element of `Gal(h_i/g)` maps `h_(i-1)` into itself.
    pub invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub steps: Vec<RadicalStep>,
    pub radical: bool,
    /// Analysis of `Gal(h/g)`.
    pub analysis: GroupAnalysis,
}

/// Checks that `chain` (starting at `g`, optionally ending at `h`) is a flag
/// of subalgebras with codimension-one steps and tests each `h_(i-1)` for
/// invariance under `Gal(h_i/g)`.
pub fn verify_radical_chain(h: &LieAlgebra, chain: &[Subspace], options: &EnumerationOptions) -> Result<RadicalReport> {
    let field = h.field();
    let full = h.full_space();
    let mut chain = chain.to_vec();
    if chain.is_empty() {
        return Err(Error::Chain("empty chain".into()));
    }
    if chain.last() != Some(&full) {
        chain.push(full);
    }
    for (i, s) in chain.iter().enumerate() {
        field.check(&s.field())?;
        if s.ambient_dim() != h.dim() {
            return Err(Error::Chain(format!("step {i} lives in a different space")));
        }
        if !h.is_subalgebra(s)? {
            return Err(Error::Chain(format!("step {i} is not a subalgebra")));
        }
    }
    for (i, w) in chain.windows(2).enumerate() {
        if !w[0].is_subspace_of(&w[1])? {
            return Err(Error::Chain(format!("step {i} is not contained in step {}", i + 1)));
        }
        if w[1].dim() != w[0].dim() + 1 {
            return Err(Error::Chain(format!(
                "step {} has codimension {} in step {}",
                i,
                w[1].dim() - w[0].dim(),
                i + 1
            )));
        }
    }
    let g = &chain[0];
    let mut steps = Vec::new();
    let mut last = None;
    for i in 1..chain.len() {
        let basis = chain[i].basis_vectors();
        let hi = h.induced(&basis, crate::lie::algebra::vector_names(h, &basis, "h"))?;
        let local = |s: &Subspace| -> Result<Subspace> {
            let coords = s
                .basis_vectors()
                .iter()
                .map(|v| chain[i].coordinates(v).map(|c| c.expect("nested")))
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(field, basis.len(), &coords)
        };
        let ext = Extension::new(hi, local(g)?)?;
        let group = galois_group_structured(&ext, options)?;
        let prev = local(&chain[i - 1])?;
        let mut invariant = true;
        for m in group.omega_images(&ext) {
            if prev.image(&m)? != prev {
                invariant = false;
                break;
            }
        }
        steps.push(RadicalStep {
            index: i,
            dim: basis.len(),
            group_order: group.order(),
            invariant,
        });
        last = Some(group);
    }
    let analysis = match last {
        Some(group) => group.analysis()?,
        None => crate::group::CayleyTable::from_elements(&[()], |_, _| ())?.analysis(),
    };
    Ok(RadicalReport {
        radical: steps.iter().all(|s| s.invariant),
        steps,
        analysis,
    })
}
