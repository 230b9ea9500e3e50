//! Subspaces of `k^n` in canonical form.

use super::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

/// A subspace of `k^n`, stored as the nonzero rows of its reduced
/// row-echelon basis. Equal subspaces have identical representations, so
/// `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        let rank = r.pivots.len();
        let rows: Vec<Vec<Scalar>> = (0..rank).map(|i| r.matrix.row(i).to_vec()).collect();
        let basis = if rows.is_empty() {
            Matrix::zeros(m.field(), 0, m.cols())
        } else {
            Matrix::from_rows(m.field(), &rows).expect("rref rows")
        };
        Subspace {
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {ambient}",
                v.len()
            )));
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        Ok(Subspace::from_matrix(&Matrix::from_rows(field, vectors)?))
    }

    /// Span of standard basis vectors `e_i`, `i` in `indices`.
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Result<Self> {
        let vectors = indices
            .iter()
            .map(|&i| {
                if i >= ambient {
                    return Err(Error::BadIndex(format!("{i} >= {ambient}")));
                }
                Ok(unit(field, ambient, i))
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(field, ambient, &vectors)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical basis as the rows of a reduced row-echelon matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.ambient
            )));
        }
        if let Some(s) = v.first() {
            self.field().check(&s.field())?;
        }
        Ok(())
    }

    fn check_peer(&self, other: &Subspace) -> Result<()> {
        self.field().check(&other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_vector(v)?;
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in rest.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *r -= &(c * b);
                }
            }
        }
        Ok(rest.iter().all(Scalar::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_peer(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_peer(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Computed from the kernel of `[U^T | -W^T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_peer(other)?;
        let field = self.field();
        let u = self.basis_vectors();
        let w = other.basis_vectors();
        let mut columns = u.clone();
        columns.extend(w.iter().map(|v| v.iter().map(|s| -s).collect()));
        let stacked = Matrix::from_columns(field, self.ambient, &columns)?;
        let vectors: Vec<Vec<Scalar>> = stacked
            .kernel()
            .basis_vectors()
            .iter()
            .map(|k| combine(field, self.ambient, &u, &k[..u.len()]))
            .collect();
        Subspace::span(field, self.ambient, &vectors)
    }

    /// Standard basis indices that complete this subspace to the whole space
    /// (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Image under a linear map given by a square matrix.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch("map does not act on the ambient space".into()));
        }
        let vectors: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vectors)
    }
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// `sum_i coeffs[i] * vectors[i]`.
pub fn combine(field: Field, n: usize, vectors: &[Vec<Scalar>], coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn v(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn coordinate_lines() {
        let q = Field::rationals();
        let u = Subspace::coordinate(q, 3, &[0]).unwrap();
        let w = Subspace::coordinate(q, 3, &[1]).unwrap();
        assert_eq!(u.sum(&w).unwrap().dim(), 2);
        assert_eq!(u.intersection(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersection(&u).unwrap(), u);
    }

    #[test]
    fn f2_four_space() {
        let k = f2();
        let u = Subspace::span(k, 4, &[v(k, &[1, 1, 0, 0]), v(k, &[0, 0, 1, 0])]).unwrap();
        let w = Subspace::span(k, 4, &[v(k, &[0, 1, 1, 0])]).unwrap();
        assert_eq!(u.intersection(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&w).unwrap().dim(), 3);
    }

    #[test]
    fn canonical_representation() {
        let q = Field::rationals();
        let a = Subspace::span(q, 3, &[v(q, &[1, 2, 3]), v(q, &[0, 1, 1])]).unwrap();
        let b = Subspace::span(q, 3, &[v(q, &[1, 3, 4]), v(q, &[2, 4, 6]), v(q, &[1, 1, 2])]).unwrap();
        assert_eq!(a, b);
        let c = a.coordinates(&v(q, &[3, 7, 10])).unwrap().unwrap();
        assert_eq!(combine(q, 3, &a.basis_vectors(), &c), v(q, &[3, 7, 10]));
        assert!(!a.contains(&v(q, &[0, 0, 1])).unwrap());
        assert_eq!(a.complement_indices(), vec![2]);
    }

    #[test]
    fn mismatches_are_errors() {
        let q = Field::rationals();
        let a = Subspace::zero(q, 3);
        let b = Subspace::zero(q, 4);
        assert!(a.sum(&b).is_err());
        assert!(a.contains(&v(q, &[1, 2])).is_err());
        assert!(Subspace::coordinate(q, 2, &[2]).is_err());
    }
}
