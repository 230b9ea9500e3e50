//! Finite groups acting on a Lie algebra by automorphisms.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupAnalysis};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::products::{
    canonical_extending_system, phi_iso_check, semidirect_product, AxiomReport, ExtendingSystem, Extension,
};

/// Default bound on the number of elements produced by [`close_group`].
pub const DEFAULT_CAP: usize = 20_000;

/// A finite group of automorphisms of a Lie algebra, listed element by
/// element. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    algebra: LieAlgebra,
    elements: Vec<Matrix>,
    generators: Vec<usize>,
}

/// The averaging operator `t = |G|^-1 sum_g g` with its image and kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReynoldsData {
    pub t: Matrix,
    pub invariants: Subspace,
    pub kernel: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hilbert90Report {
    /// `{y - gamma(y)}`.
    pub image: Subspace,
    /// `Ker t`.
    pub kernel: Subspace,
    pub holds: bool,
}

/// The skew crossed product rebuilt from the invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinReconstruction {
    /// `h` over `h^G` with complement `Ker t`.
    pub extension: Extension,
    /// `x <- g = [x,g]`, `theta(x,y) = |G|^-1 sum_g [g x, g y]`,
    /// `{x,y} = [x,y] - theta(x,y)`.
    pub system: ExtendingSystem,
    /// True when `system` equals the canonical system of `extension`.
    pub matches_canonical: bool,
    pub skew_axioms: AxiomReport,
    /// Present when the skew axioms hold.
    pub product: Option<LieAlgebra>,
    /// `phi(g, x) = g + x` is a Lie isomorphism onto `h`.
    pub iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicStructure {
    pub invariants: Subspace,
    /// `h_gamma = {y - gamma(y)}`.
    pub h_gamma: Subspace,
    pub theta_vanishes: bool,
    pub h_gamma_is_ideal: bool,
    /// `h^G x h_gamma` with `x <- g = [x, g]`.
    pub product: LieAlgebra,
    pub iso: bool,
}

/// Closes `generators` under multiplication, breadth first from the
/// identity. Each new layer is sorted, so the element order is
/// deterministic.
pub fn close_group(algebra: &LieAlgebra, generators: &[Matrix], cap: usize) -> Result<GroupAction> {
    for (i, g) in generators.iter().enumerate() {
        if !algebra.is_automorphism(g)? {
            return Err(Error::NotAutomorphism(format!("generator {i}")));
        }
    }
    let id = Matrix::identity(algebra.field(), algebra.dim());
    let mut elements = vec![id.clone()];
    let mut seen: HashSet<Matrix> = HashSet::from([id]);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next: Vec<Matrix> = Vec::new();
        for &e in &layer {
            for g in generators {
                let y = &elements[e] * g;
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        next.sort();
        if elements.len() + next.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        let start = elements.len();
        elements.extend(next);
        layer = (start..elements.len()).collect();
    }
    let generators = generators
        .iter()
        .map(|g| elements.iter().position(|e| e == g).expect("generator is in its closure"))
        .collect();
    Ok(GroupAction {
        algebra: algebra.clone(),
        elements,
        generators,
    })
}

impl GroupAction {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn cayley_table(&self) -> CayleyTable {
        CayleyTable::from_elements(&self.elements, |a, b| a * b).expect("closed group")
    }

    pub fn analysis(&self) -> GroupAnalysis {
        self.cayley_table().analysis()
    }

    fn fixed_space(&self, elements: impl Iterator<Item = usize>) -> Subspace {
        let mut acc = self.algebra.full_space();
        let id = Matrix::identity(self.algebra.field(), self.algebra.dim());
        for i in elements {
            let ker = self.elements[i].checked_sub(&id).expect("same shape").kernel();
            acc = acc.intersection(&ker).expect("same ambient");
        }
        acc
    }

    /// `h^G`, computed as the common fixed space of the generators.
    pub fn invariants(&self) -> Subspace {
        self.fixed_space(self.generators.iter().copied())
    }

    /// `h^G` computed from every group element.
    pub fn invariants_all_elements(&self) -> Subspace {
        self.fixed_space(0..self.order())
    }

    fn order_inverse(&self) -> Result<Scalar> {
        let field = self.algebra.field();
        field
            .from_i64(self.order() as i64)
            .inv()
            .ok_or(Error::ModularCase {
                order: self.order(),
                characteristic: field.characteristic(),
            })
    }

    pub fn reynolds(&self) -> Result<ReynoldsData> {
        let inv = self.order_inverse()?;
        let n = self.algebra.dim();
        let mut sum = Matrix::zeros(self.algebra.field(), n, n);
        for e in &self.elements {
            sum = sum.checked_add(e)?;
        }
        let t = sum.scale(&inv);
        Ok(ReynoldsData {
            invariants: t.column_space(),
            kernel: t.kernel(),
            t,
        })
    }

    fn check_generator(&self, gamma: usize) -> Result<()> {
        if gamma >= self.order() {
            return Err(Error::BadIndex(format!("group element {gamma}")));
        }
        let order = self.cayley_table().element_order(gamma);
        if order != self.order() {
            return Err(Error::NotCyclic {
                order,
                group_order: self.order(),
            });
        }
        Ok(())
    }

    /// `h_gamma = Im(id - gamma)`.
    pub fn h_gamma(&self, gamma: usize) -> Result<Subspace> {
        let el = self.elements.get(gamma).ok_or_else(|| Error::BadIndex(format!("group element {gamma}")))?;
        let id = Matrix::identity(self.algebra.field(), self.algebra.dim());
        Ok(id.checked_sub(el)?.column_space())
    }

    /// Compares `Ker t` with `Im(id - gamma)` for a generator `gamma`.
    pub fn hilbert90_check(&self, gamma: usize) -> Result<Hilbert90Report> {
        self.check_generator(gamma)?;
        let kernel = self.reynolds()?.kernel;
        let image = self.h_gamma(gamma)?;
        Ok(Hilbert90Report {
            holds: image == kernel,
            image,
            kernel,
        })
    }

    /// `[g(z), g'(z')] = 0` for all ordered pairs of distinct elements
    /// `g, g'` and all `z, z'` in `h_gamma`.
    pub fn gamma_abelian_check(&self, gamma: usize) -> Result<bool> {
        let hg = self.h_gamma(gamma)?.basis_vectors();
        let moved: Vec<Vec<Vec<Scalar>>> = self
            .elements
            .iter()
            .map(|e| hg.iter().map(|z| e.mul_vec(z)).collect())
            .collect();
        for (i, zi) in moved.iter().enumerate() {
            for (j, zj) in moved.iter().enumerate() {
                if i == j {
                    continue;
                }
                for a in zi {
                    for b in zj {
                        if self.algebra.br(a, b).iter().any(|c| !c.is_zero()) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// The system on `V = Ker t` given by averaging, checked against the
    /// canonical system of `h^G` in `h`.
    pub fn artin_reconstruct(&self) -> Result<ArtinReconstruction> {
        let data = self.reynolds()?;
        let inv = self.order_inverse()?;
        let h = &self.algebra;
        let ext = Extension::with_complement(h.clone(), data.invariants.clone(), data.kernel.basis_vectors())?;
        let g_basis = ext.sub().basis_vectors();
        let v_basis = ext.complement().to_vec();
        let m = v_basis.len();
        let mut sys = ExtendingSystem::zero(ext.sub_algebra().clone(), m).with_v_names(ext.v_names())?;
        for (x, vx) in v_basis.iter().enumerate() {
            for (a, ga) in g_basis.iter().enumerate() {
                let (gp, vp) = ext.split(&h.br(vx, ga));
                if gp.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Internal("[Ker t, h^G] is not contained in Ker t".into()));
                }
                sys.set_left(x, a, vp)?;
            }
            for (y, vy) in v_basis.iter().enumerate().skip(x + 1) {
                let mut avg = vec![h.field().zero(); h.dim()];
                for e in &self.elements {
                    let b = h.br(&e.mul_vec(vx), &e.mul_vec(vy));
                    for (s, c) in avg.iter_mut().zip(&b) {
                        *s += c;
                    }
                }
                let theta: Vec<Scalar> = avg.iter().map(|c| c * &inv).collect();
                let (tg, tv) = ext.split(&theta);
                if tv.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Internal("averaged cocycle is not invariant".into()));
                }
                let (_, bv) = ext.split(&h.br(vx, vy));
                let quasi_full: Vec<Scalar> = h.br(vx, vy).iter().zip(&theta).map(|(a, b)| a - b).collect();
                let (qg, qv) = ext.split(&quasi_full);
                if qg.iter().any(|c| !c.is_zero()) || qv != bv {
                    return Err(Error::Internal("quasi-bracket leaves Ker t".into()));
                }
                sys.set_theta(x, y, tg)?;
                sys.set_quasi(x, y, qv)?;
            }
        }
        let matches_canonical = sys == canonical_extending_system(&ext);
        let skew_axioms = sys.check_skew_axioms()?;
        let product = if skew_axioms.passes() {
            Some(sys.try_product_algebra()?)
        } else {
            None
        };
        let iso = product.as_ref().is_some_and(|p| phi_iso_check(&ext, p));
        Ok(ArtinReconstruction {
            extension: ext,
            system: sys,
            matches_canonical,
            skew_axioms,
            product,
            iso,
        })
    }

    /// For a cyclic, gamma-abelian action with `|G|` invertible, builds
    /// `h^G x h_gamma` and checks that `g + x` identifies it with `h`.
    pub fn cyclic_structure(&self, gamma: usize) -> Result<CyclicStructure> {
        let h90 = self.hilbert90_check(gamma)?;
        if !h90.holds {
            return Err(Error::Internal("Hilbert 90 fails".into()));
        }
        if !self.gamma_abelian_check(gamma)? {
            return Err(Error::NotGammaAbelian);
        }
        let artin = self.artin_reconstruct()?;
        let theta_vanishes = artin.system.theta_is_zero();
        let h = &self.algebra;
        let h_gamma = h90.image;
        let h_gamma_is_ideal = h.is_ideal(&h_gamma)?;
        let ext = Extension::with_complement(h.clone(), self.invariants(), h_gamma.basis_vectors())?;
        let v_alg = h.induced(ext.complement(), ext.v_names())?;
        let g_alg = ext.sub_algebra();
        let action: Vec<Matrix> = ext
            .sub()
            .basis_vectors()
            .iter()
            .map(|ga| {
                let cols: Vec<Vec<Scalar>> = ext.complement().iter().map(|vx| ext.split(&h.br(vx, ga)).1).collect();
                Matrix::from_columns(h.field(), ext.v_dim(), &cols)
            })
            .collect::<Result<_>>()?;
        let product = semidirect_product(g_alg, &v_alg, &action)?;
        let iso = phi_iso_check(&ext, &product);
        Ok(CyclicStructure {
            invariants: ext.sub().clone(),
            h_gamma,
            theta_vanishes,
            h_gamma_is_ideal,
            product,
            iso,
        })
    }
}

/// Matrix of `x |-> u x u^-1` on `gl(n)` in the basis `e_ij` (row-major).
pub fn conjugation_matrix(u: &Matrix) -> Result<Matrix> {
    let n = u.rows();
    let uinv = u
        .inverse()?
        .ok_or_else(|| Error::InvalidParameter("conjugating matrix is singular".into()))?;
    let field = u.field();
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::zeros(field, n, n);
            e.set(i, j, field.one());
            let c = &(u * &e) * &uinv;
            cols.push(c.entries().to_vec());
        }
    }
    Matrix::from_columns(field, n * n, &cols)
}

/// Matrix of conjugation by the permutation matrix of `perm` on `gl(n)`,
/// where the permutation matrix sends `e_i` to `e_perm(i)`.
pub fn permutation_conjugation(field: crate::linalg::Field, perm: &[usize]) -> Result<Matrix> {
    let n = perm.len();
    let mut p = Matrix::zeros(field, n, n);
    for (i, &j) in perm.iter().enumerate() {
        if j >= n {
            return Err(Error::BadIndex(format!("permutation entry {j}")));
        }
        p.set(j, i, field.one());
    }
    conjugation_matrix(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog;
    use crate::linalg::Field;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn closure_of_torus_generator() {
        let k = f5();
        let g = Matrix::from_i64(k, 3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 1]);
        let act = close_group(&catalog::sl(k, 2).unwrap(), &[g], DEFAULT_CAP).unwrap();
        assert_eq!(act.order(), 4);
        assert!(act.analysis().cyclic);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let k = f5();
        let l = catalog::aff2(k).unwrap();
        let act = close_group(&l, &[Matrix::identity(k, 2)], DEFAULT_CAP).unwrap();
        assert_eq!(act.order(), 1);
        let r = act.reynolds().unwrap();
        assert!(r.t.is_identity());
        assert!(r.kernel.is_zero());
        assert!(act.hilbert90_check(0).unwrap().holds);
        assert!(act.gamma_abelian_check(0).unwrap());
    }

    #[test]
    fn non_automorphism_generator_is_rejected() {
        let k = f5();
        let l = catalog::sl(k, 2).unwrap();
        let g = Matrix::from_i64(k, 3, 3, &[2, 0, 0, 0, 2, 0, 0, 0, 1]);
        assert!(matches!(close_group(&l, &[g], DEFAULT_CAP), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let k = f5();
        let g = Matrix::from_i64(k, 3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 1]);
        let err = close_group(&catalog::sl(k, 2).unwrap(), &[g], 3).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 3 });
    }

    #[test]
    fn infinite_order_over_rationals_hits_the_cap() {
        let q = Field::rationals();
        let g = Matrix::from_i64(q, 3, 3, &[2, 0, 0, 0, 1, 0, 0, 0, 1]);
        let g = {
            let mut g = g;
            g.set(1, 1, q.from_ratio(1, 2).unwrap());
            g
        };
        let err = close_group(&catalog::sl(q, 2).unwrap(), &[g], 50).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 50 });
    }

    #[test]
    fn modular_case_is_reported() {
        let k = Field::prime(2).unwrap();
        let l = catalog::abelian(k, 2).unwrap();
        let swap = Matrix::from_i64(k, 2, 2, &[0, 1, 1, 0]);
        let act = close_group(&l, &[swap], DEFAULT_CAP).unwrap();
        assert_eq!(
            act.reynolds().unwrap_err(),
            Error::ModularCase {
                order: 2,
                characteristic: 2
            }
        );
    }

    #[test]
    fn non_generator_is_rejected() {
        let k = f5();
        let g = Matrix::from_i64(k, 3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 1]);
        let act = close_group(&catalog::sl(k, 2).unwrap(), &[g], DEFAULT_CAP).unwrap();
        let minus = act
            .index_of(&Matrix::from_i64(k, 3, 3, &[4, 0, 0, 0, 4, 0, 0, 0, 1]))
            .unwrap();
        assert!(matches!(act.hilbert90_check(minus), Err(Error::NotCyclic { order: 2, .. })));
    }
}
