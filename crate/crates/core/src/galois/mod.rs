//! Galois groups `Gal(h/g)`: automorphisms of `h` fixing `g` pointwise.
//!
//! An element is a pair `(sigma, r)` with `sigma: V -> V` invertible and
//! `r: V -> g`, acting on `h = g + V` by `g + x |-> g + r(x) + sigma(x)`.
//! Pairs multiply as `(sigma, r)(sigma', r') = (sigma sigma', r sigma' + r')`.

mod codim1;
mod enumerate;
pub(crate) mod fp;
mod radical;

pub use codim1::codim1_group;
pub use enumerate::{galois_group_of_system, galois_group_direct, galois_group_structured, EnumerationOptions, DEFAULT_BUDGET};
pub use radical::{verify_radical_chain, RadicalReport, RadicalStep};

use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupAnalysis};
use crate::linalg::{Field, Matrix, Scalar};
use crate::products::{canonical_extending_system, ExtendingSystem, Extension};
use fp::{residue, Fp};

/// `sigma` is `m x m`, `r` is `n x m`; column `x` holds the images of the
/// `x`-th basis vector of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisElement {
    pub sigma: Matrix,
    pub r: Matrix,
}

impl GaloisElement {
    pub fn identity(field: Field, n: usize, m: usize) -> Self {
        GaloisElement {
            sigma: Matrix::identity(field, m),
            r: Matrix::zeros(field, n, m),
        }
    }

    /// `(sigma, r)(sigma', r') = (sigma sigma', r sigma' + r')`.
    pub fn compose(&self, other: &GaloisElement) -> Result<GaloisElement> {
        Ok(GaloisElement {
            sigma: self.sigma.checked_mul(&other.sigma)?,
            r: self.r.checked_mul(&other.sigma)?.checked_add(&other.r)?,
        })
    }
}

/// Result of checking (G1)-(G4) for one pair. Each entry names the first
/// failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisPairReport {
    pub invertible: bool,
    pub g1: Option<String>,
    pub g2: Option<String>,
    pub g3: Option<String>,
    pub g4: Option<String>,
}

impl GaloisPairReport {
    pub fn passes(&self) -> bool {
        self.invertible && self.g1.is_none() && self.g2.is_none() && self.g3.is_none() && self.g4.is_none()
    }
}

/// Checks (G1)-(G4) against the system `sys`:
///
/// * (G1) `sigma(x <- g) = sigma(x) <- g`
/// * (G2) `r(x <- g) = [r(x), g] + (sigma(x) - x) -> g`
/// * (G3) `sigma{x,y} = {sigma x, sigma y} + sigma(x) <- r(y) - sigma(y) <- r(x)`
/// * (G4) `r{x,y} = [rx, ry] + sigma(x) -> r(y) - sigma(y) -> r(x) + theta(sigma x, sigma y) - theta(x,y)`
pub fn is_galois_pair(sys: &ExtendingSystem, sigma: &Matrix, r: &Matrix) -> Result<GaloisPairReport> {
    let (n, m) = (sys.g_dim(), sys.v_dim());
    let field = sys.field();
    field.check(&sigma.field())?;
    field.check(&r.field())?;
    if (sigma.rows(), sigma.cols(), r.rows(), r.cols()) != (m, m, n, m) {
        return Err(Error::DimensionMismatch(format!(
            "expected sigma {m}x{m} and r {n}x{m}, got {}x{} and {}x{}",
            sigma.rows(),
            sigma.cols(),
            r.rows(),
            r.cols()
        )));
    }
    let g = sys.g();
    let vn = sys.v_names();
    let gn = g.names();
    let ev = |x| crate::linalg::unit(field, m, x);
    let eg = |a| crate::linalg::unit(field, n, a);
    let sub = |a: Vec<Scalar>, b: Vec<Scalar>| -> Vec<Scalar> { a.iter().zip(&b).map(|(x, y)| x - y).collect() };
    let add = |a: Vec<Scalar>, b: Vec<Scalar>| -> Vec<Scalar> { a.iter().zip(&b).map(|(x, y)| x + y).collect() };
    let (mut g1, mut g2, mut g3, mut g4) = (None, None, None, None);
    for x in 0..m {
        let sx = sigma.column(x);
        let rx = r.column(x);
        for a in 0..n {
            let ea = eg(a);
            let xa = sys.left_v(&ev(x), &ea);
            if g1.is_none() && sigma.mul_vec(&xa) != sys.left_v(&sx, &ea) {
                g1 = Some(format!("(x={}, g={})", vn[x], gn[a]));
            }
            let moved: Vec<Scalar> = sub(sx.clone(), ev(x));
            let rhs = add(g.br(&rx, &ea), sys.right_v(&moved, &ea));
            if g2.is_none() && r.mul_vec(&xa) != rhs {
                g2 = Some(format!("(x={}, g={})", vn[x], gn[a]));
            }
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            let (sx, sy, rx, ry) = (sigma.column(x), sigma.column(y), r.column(x), r.column(y));
            let q = sys.quasi(x, y);
            let rhs3 = sub(
                add(sys.quasi_v(&sx, &sy), sys.left_v(&sx, &ry)),
                sys.left_v(&sy, &rx),
            );
            if g3.is_none() && sigma.mul_vec(&q) != rhs3 {
                g3 = Some(format!("(x={}, y={})", vn[x], vn[y]));
            }
            let rhs4 = sub(
                add(
                    sub(add(g.br(&rx, &ry), sys.right_v(&sx, &ry)), sys.right_v(&sy, &rx)),
                    sys.theta_v(&sx, &sy),
                ),
                sys.theta(x, y),
            );
            if g4.is_none() && r.mul_vec(&q) != rhs4 {
                g4 = Some(format!("(x={}, y={})", vn[x], vn[y]));
            }
        }
    }
    Ok(GaloisPairReport {
        invertible: sigma.is_invertible(),
        g1,
        g2,
        g3,
        g4,
    })
}

/// Matrix on `h` of `g + x |-> g + r(x) + sigma(x)`, without validation.
pub fn omega_matrix(ext: &Extension, el: &GaloisElement) -> Matrix {
    let (n, m) = (ext.g_dim(), ext.v_dim());
    let field = ext.field();
    let mut block = Matrix::identity(field, n + m);
    for x in 0..m {
        for a in 0..n {
            block.set(a, n + x, el.r.get(a, x).clone());
        }
        for z in 0..m {
            block.set(n + z, n + x, el.sigma.get(z, x).clone());
        }
    }
    &(ext.frame() * &block) * ext.frame_inv()
}

/// `Omega(sigma, r)`, after checking (G1)-(G4) against the canonical system.
pub fn omega(ext: &Extension, el: &GaloisElement) -> Result<Matrix> {
    let report = is_galois_pair(&canonical_extending_system(ext), &el.sigma, &el.r)?;
    if !report.passes() {
        return Err(Error::NotAutomorphism(format!("pair fails the Galois conditions: {report:?}")));
    }
    Ok(omega_matrix(ext, el))
}

/// A finite Galois group in `(sigma, r)` coordinates, elements in
/// lexicographic order of their residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisGroup {
    field: Field,
    n: usize,
    m: usize,
    /// `sigma` row-major, then `r` row-major.
    keys: Vec<Vec<u32>>,
}

impl GaloisGroup {
    pub(crate) fn from_keys(field: Field, n: usize, m: usize, mut keys: Vec<Vec<u32>>) -> Self {
        keys.sort_unstable();
        keys.dedup();
        GaloisGroup { field, n, m, keys }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn g_dim(&self) -> usize {
        self.n
    }

    pub fn v_dim(&self) -> usize {
        self.m
    }

    fn fp(&self) -> Fp {
        Fp {
            p: self.field.modulus().expect("finite field"),
        }
    }

    fn element_of(&self, key: &[u32]) -> GaloisElement {
        let (n, m) = (self.n, self.m);
        let s: Vec<i64> = key[..m * m].iter().map(|&v| v as i64).collect();
        let r: Vec<i64> = key[m * m..].iter().map(|&v| v as i64).collect();
        GaloisElement {
            sigma: Matrix::from_i64(self.field, m, m, &s),
            r: Matrix::from_i64(self.field, n, m, &r),
        }
    }

    pub fn elements(&self) -> Vec<GaloisElement> {
        self.keys.iter().map(|k| self.element_of(k)).collect()
    }

    pub fn contains(&self, el: &GaloisElement) -> bool {
        let key: Vec<u32> = el.sigma.entries().iter().chain(el.r.entries()).map(residue).collect();
        self.keys.binary_search(&key).is_ok()
    }

    fn mul_keys(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let (n, m) = (self.n, self.m);
        let f = self.fp();
        let (sa, ra) = a.split_at(m * m);
        let (sb, rb) = b.split_at(m * m);
        let mut out = f.matmul(sa, sb, m, m, m);
        let rs = f.matmul(ra, sb, n, m, m);
        out.extend(rs.iter().zip(rb).map(|(&x, &y)| f.add(x, y)));
        out
    }

    pub fn cayley_table(&self) -> Result<CayleyTable> {
        CayleyTable::from_elements(&self.keys, |a, b| self.mul_keys(a, b))
    }

    pub fn analysis(&self) -> Result<GroupAnalysis> {
        Ok(self.cayley_table()?.analysis())
    }

    /// `Omega` images as matrices on `h`.
    pub fn omega_images(&self, ext: &Extension) -> Vec<Matrix> {
        self.elements().iter().map(|e| omega_matrix(ext, e)).collect()
    }

    /// Checks `Omega(ab) = Omega(a) Omega(b)` for all pairs, and that every
    /// image is an automorphism of `h` fixing `g` pointwise.
    pub fn omega_homomorphism_check(&self, ext: &Extension) -> bool {
        let f = self.fp();
        let dim = ext.ambient().dim();
        let images = self.omega_images(ext);
        let flat: Vec<Vec<u32>> = images.iter().map(|m| m.entries().iter().map(residue).collect()).collect();
        let g_basis = ext.sub().basis_vectors();
        for img in &images {
            if !ext.ambient().is_automorphism(img).unwrap_or(false) {
                return false;
            }
            if g_basis.iter().any(|v| &img.mul_vec(v) != v) {
                return false;
            }
        }
        for (i, a) in self.keys.iter().enumerate() {
            for (j, b) in self.keys.iter().enumerate() {
                let Ok(k) = self.keys.binary_search(&self.mul_keys(a, b)) else {
                    return false;
                };
                if f.matmul(&flat[i], &flat[j], dim, dim, dim) != flat[k] {
                    return false;
                }
            }
        }
        true
    }

    /// For `dim V = 1`: the pairs `(u, g0)` with `sigma = u`, `r = g0`.
    pub fn codim1_pairs(&self) -> Option<Vec<(Scalar, Vec<Scalar>)>> {
        (self.m == 1).then(|| {
            self.elements()
                .into_iter()
                .map(|e| (e.sigma.get(0, 0).clone(), e.r.column(0)))
                .collect()
        })
    }
}

/// Gal(gl(m)/sl(m)) over a prime field, together with whether `sl(m)` is
/// sympathetic there. Over fields of characteristic zero the group is
/// `k^*` when `sl(m)` is sympathetic; this reports the finite-field
/// behaviour without asserting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlSlReport {
    pub sl_sympathetic: bool,
    pub order: usize,
    pub units: usize,
    pub agrees: bool,
}

pub fn gl_sl_exploration(field: Field, m: usize, options: &EnumerationOptions) -> Result<GlSlReport> {
    let p = field.modulus().ok_or_else(|| Error::InfiniteField(field.to_string()))? as usize;
    let gl = crate::lie::catalog::gl(field, m)?;
    let sl_sub = crate::linalg::Subspace::span(field, m * m, &crate::lie::catalog::sl_basis_in_gl(field, m))?;
    let sl_sympathetic = gl.restrict(&sl_sub)?.flags().sympathetic;
    let ext = Extension::new(gl, sl_sub)?;
    let group = galois_group_structured(&ext, options)?;
    Ok(GlSlReport {
        sl_sympathetic,
        order: group.order(),
        units: p - 1,
        agrees: group.order() == p - 1,
    })
}
