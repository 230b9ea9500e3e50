//! Dense matrices over a [`Field`].
//!
//! A matrix acts on column vectors: column `j` holds the image of the basis
//! vector `e_j`.

use std::fmt;
use std::ops::Mul;

use super::{Field, Scalar, Subspace};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// All solutions `X` of `A X = B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// Every solution is `particular` plus a matrix whose columns lie in
    /// `kernel`.
    Consistent { particular: Matrix, kernel: Subspace },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Panics if `values.len() != rows * cols`.
    pub fn from_i64(field: Field, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count");
        Matrix {
            field,
            rows,
            cols,
            data: values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for s in r {
                field.check(&s.field())?;
                data.push(s.clone());
            }
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    c.len()
                )));
            }
            for (i, s) in c.iter().enumerate() {
                field.check(&s.field())?;
                m.data[i * m.cols + j] = s.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry from a different field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        self.field.check(&other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check(&other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * out.cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &factor * m.get(r, j);
                    if !sub.is_zero() {
                        m.data[i * m.cols + j] -= &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Null space `{x : A x = 0}` as a subspace of `k^cols`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &vectors).expect("kernel vectors are well formed")
    }

    /// Span of the columns.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    /// Solves `A X = B`.
    pub fn solve(&self, b: &Matrix) -> Result<Solution> {
        self.field.check(&b.field)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} rows but right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let Rref { matrix, pivots } = self.hstack(b)?.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = Matrix::zeros(self.field, self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.data[p * b.cols + j] = matrix.get(r, self.cols + j).clone();
            }
        }
        Ok(Solution::Consistent {
            particular,
            kernel: self.kernel(),
        })
    }

    /// `Ok(None)` for singular input.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let Rref { matrix, pivots } = self.hstack(&Matrix::identity(self.field, n))?.rref();
        if n > 0 && pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = matrix.get(i, n + j).clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let factor = m.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let sub = &factor * m.get(c, j);
                    m.data[i * n + j] -= &sub;
                }
            }
        }
        Ok(det)
    }

    /// Panics on non-square input.
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Panics on shape or field mismatch; use [`Matrix::checked_mul`] for a
/// fallible product.
impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn solve_identity() {
        let i = Matrix::identity(f(3), 2);
        match i.solve(&i).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, i);
                assert_eq!(kernel.dim(), 0);
            }
            Solution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn solve_zero_map() {
        let z = Matrix::zeros(q(), 2, 2);
        match z.solve(&z).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert!(particular.is_zero());
                assert_eq!(kernel.dim(), 2);
            }
            Solution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn solve_rank_one_system() {
        let a = Matrix::from_i64(q(), 2, 2, &[1, 2, 2, 4]);
        let b = Matrix::from_i64(q(), 2, 1, &[3, 6]);
        let Solution::Consistent { particular, kernel } = a.solve(&b).unwrap() else {
            panic!("consistent system")
        };
        assert_eq!(particular, Matrix::from_i64(q(), 2, 1, &[3, 0]));
        assert_eq!(kernel.dim(), 1);
        assert!(kernel.contains(&[q().from_i64(-2), q().from_i64(1)]).unwrap());
        assert_eq!(&a * &particular, b);
        let inconsistent = Matrix::from_i64(q(), 2, 1, &[3, 7]);
        assert_eq!(a.solve(&inconsistent).unwrap(), Solution::Inconsistent);
    }

    #[test]
    fn solve_checks_shapes() {
        let a = Matrix::identity(q(), 2);
        assert!(matches!(
            a.solve(&Matrix::zeros(q(), 3, 1)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            a.solve(&Matrix::zeros(f(5), 2, 1)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn rref_examples() {
        let r = Matrix::identity(q(), 3).rref();
        assert_eq!(r.matrix, Matrix::identity(q(), 3));
        assert_eq!(r.pivots.len(), 3);

        let r = Matrix::from_i64(q(), 1, 2, &[2, 4]).rref();
        assert_eq!(r.matrix, Matrix::from_i64(q(), 1, 2, &[1, 2]));

        let r = Matrix::from_i64(f(2), 2, 2, &[1, 1, 1, 1]).rref();
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix.row(0), Matrix::from_i64(f(2), 1, 2, &[1, 1]).row(0));
    }

    #[test]
    fn inverse_examples() {
        let i5 = Matrix::identity(q(), 5);
        assert_eq!(i5.inverse().unwrap(), Some(i5.clone()));

        let swap = Matrix::from_i64(f(3), 2, 2, &[0, 1, 1, 0]);
        assert_eq!(swap.inverse().unwrap(), Some(swap.clone()));

        let shear = Matrix::from_i64(q(), 2, 2, &[1, 1, 0, 1]);
        let inv = shear.inverse().unwrap().unwrap();
        assert_eq!(inv, Matrix::from_i64(q(), 2, 2, &[1, -1, 0, 1]));
        assert!((&shear * &inv).is_identity());

        let singular = Matrix::from_i64(q(), 2, 2, &[1, 2, 2, 4]);
        assert_eq!(singular.inverse().unwrap(), None);
        assert!(Matrix::zeros(q(), 2, 3).inverse().is_err());
    }

    #[test]
    fn determinant_and_power() {
        let m = Matrix::from_i64(q(), 3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(m.determinant().unwrap(), q().from_i64(6));
        let m = Matrix::from_i64(f(5), 2, 2, &[0, 1, 1, 0]);
        assert_eq!(m.determinant().unwrap(), f(5).from_i64(-1));
        assert!(m.pow(2).is_identity());
    }
}
