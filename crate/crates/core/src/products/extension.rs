use super::ExtendingSystem;
use crate::error::{Error, Result};
use crate::lie::algebra::vector_names;
use crate::lie::LieAlgebra;
use crate::linalg::{unit, Field, Matrix, Scalar, Subspace};

/// A Lie algebra `h` with a subalgebra `g` and a complement `V`.
///
/// The retraction `p: h -> g` is the projection along `V`. Coordinates of
/// `g` are taken in the canonical basis of the subalgebra, coordinates of
/// `V` in the given complement basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    ambient: LieAlgebra,
    sub: Subspace,
    complement: Vec<Vec<Scalar>>,
    sub_algebra: LieAlgebra,
    frame: Matrix,
    frame_inv: Matrix,
}

impl Extension {
    /// Uses the greedy complement: standard basis vectors at the non-pivot
    /// columns of the canonical basis of `sub`.
    pub fn new(ambient: LieAlgebra, sub: Subspace) -> Result<Self> {
        let n = ambient.dim();
        let complement = sub
            .complement_indices()
            .into_iter()
            .map(|i| unit(ambient.field(), n, i))
            .collect();
        Extension::with_complement(ambient, sub, complement)
    }

    pub fn with_complement(ambient: LieAlgebra, sub: Subspace, complement: Vec<Vec<Scalar>>) -> Result<Self> {
        let field = ambient.field();
        field.check(&sub.field())?;
        let dim = ambient.dim();
        if sub.ambient_dim() != dim {
            return Err(Error::DimensionMismatch("subalgebra lives in a different space".into()));
        }
        if sub.dim() + complement.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "dim g + dim V = {} + {} differs from dim h = {dim}",
                sub.dim(),
                complement.len()
            )));
        }
        if !ambient.is_subalgebra(&sub)? {
            return Err(Error::NotSubalgebra);
        }
        let g_basis = sub.basis_vectors();
        let g_names = vector_names(&ambient, &g_basis, "g");
        let sub_algebra = ambient.induced(&g_basis, g_names)?;
        let mut columns = g_basis;
        columns.extend(complement.iter().cloned());
        let frame = Matrix::from_columns(field, dim, &columns)?;
        let frame_inv = frame
            .inverse()?
            .ok_or_else(|| Error::InvalidParameter("complement is not independent of the subalgebra".into()))?;
        Ok(Extension {
            ambient,
            sub,
            complement,
            sub_algebra,
            frame,
            frame_inv,
        })
    }

    pub fn field(&self) -> Field {
        self.ambient.field()
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// `g` in its canonical basis.
    pub fn sub_algebra(&self) -> &LieAlgebra {
        &self.sub_algebra
    }

    pub fn complement(&self) -> &[Vec<Scalar>] {
        &self.complement
    }

    pub fn g_dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn v_dim(&self) -> usize {
        self.complement.len()
    }

    /// Columns: the basis of `g`, then the basis of `V`, in `h` coordinates.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn frame_inv(&self) -> &Matrix {
        &self.frame_inv
    }

    /// `(p(y), y - p(y))` in `g` and `V` coordinates.
    pub fn split(&self, y: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut c = self.frame_inv.mul_vec(y);
        let v = c.split_off(self.g_dim());
        (c, v)
    }

    /// `g + x` in `h` coordinates.
    pub fn join(&self, g: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut c = g.to_vec();
        c.extend_from_slice(x);
        self.frame.mul_vec(&c)
    }

    /// The retraction `p` as a map `h -> h`.
    pub fn retraction(&self) -> Matrix {
        let n = self.g_dim();
        let dim = self.ambient.dim();
        let mut proj = Matrix::zeros(self.field(), dim, dim);
        for i in 0..n {
            proj.set(i, i, self.field().one());
        }
        &(&self.frame * &proj) * &self.frame_inv
    }

    pub fn v_names(&self) -> Vec<String> {
        vector_names(&self.ambient, &self.complement, "v")
    }
}

/// The extending system induced by the retraction:
/// `x -> g = p[x,g]`, `x <- g = [x,g] - p[x,g]`, `theta(x,y) = p[x,y]`,
/// `{x,y} = [x,y] - p[x,y]`.
pub fn canonical_extending_system(ext: &Extension) -> ExtendingSystem {
    let (n, m) = (ext.g_dim(), ext.v_dim());
    let h = ext.ambient();
    let g_basis = ext.sub().basis_vectors();
    let mut sys = ExtendingSystem::zero(ext.sub_algebra().clone(), m)
        .with_v_names(ext.v_names())
        .expect("one name per complement vector");
    for x in 0..m {
        let vx = &ext.complement()[x];
        for (a, ga) in g_basis.iter().enumerate().take(n) {
            let (gp, vp) = ext.split(&h.br(vx, ga));
            sys.set_right(x, a, gp).expect("shape");
            sys.set_left(x, a, vp).expect("shape");
        }
        for y in x + 1..m {
            let (gp, vp) = ext.split(&h.br(vx, &ext.complement()[y]));
            sys.set_theta(x, y, gp).expect("shape");
            sys.set_quasi(x, y, vp).expect("shape");
        }
    }
    sys
}

/// Checks that `phi(g, x) = g + x` is a bijective Lie map from `product`
/// (on `g x V`, basis of `g` first) onto the ambient algebra.
pub fn phi_iso_check(ext: &Extension, product: &LieAlgebra) -> bool {
    product.field() == ext.field()
        && product.dim() == ext.ambient().dim()
        && product
            .is_homomorphism(ext.ambient(), ext.frame())
            .unwrap_or(false)
}
