use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit, Field, Matrix, Scalar, Subspace};

/// One structure constant entry: `[e_i, e_j] = coefficients` (0-based).
pub type BracketEntry = (usize, usize, Vec<Scalar>);

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only `[e_i, e_j]` for `i < j` is stored; antisymmetry is implied. The
/// Jacobi identity is verified on every basis triple at construction, so
/// every value of this type is a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    names: Vec<String>,
    upper: Vec<Vec<Scalar>>,
}

/// Structural predicates of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralFlags {
    pub abelian: bool,
    pub perfect: bool,
    pub solvable: bool,
    pub complete: bool,
    pub sympathetic: bool,
    pub center_dim: usize,
    pub derivation_dim: usize,
    pub inner_derivation_dim: usize,
    pub derived_series_dims: Vec<usize>,
}

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from sparse bracket entries. Entries with `i > j`
    /// are accepted and stored as `[e_j, e_i] = -c`; unlisted pairs bracket
    /// to zero.
    pub fn new(field: Field, names: Vec<String>, entries: Vec<BracketEntry>) -> Result<Self> {
        let n = names.len();
        let mut upper = vec![vec![field.zero(); n]; n * n.saturating_sub(1) / 2];
        let mut seen = vec![false; upper.len()];
        for (i, j, coeffs) in entries {
            if i >= n || j >= n {
                return Err(Error::BadIndex(format!("bracket entry ({i}, {j}) in dimension {n}")));
            }
            if i == j {
                return Err(Error::BadIndex(format!("bracket entry ({i}, {i}) of a vector with itself")));
            }
            if coeffs.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i}, {j}) has {} coefficients, expected {n}",
                    coeffs.len()
                )));
            }
            for c in &coeffs {
                field.check(&c.field())?;
            }
            let (a, b, v) = if i < j {
                (i, j, coeffs)
            } else {
                (j, i, coeffs.iter().map(|c| -c).collect())
            };
            let k = pair_index(n, a, b);
            if seen[k] {
                return Err(Error::DuplicateEntry(a, b));
            }
            seen[k] = true;
            upper[k] = v;
        }
        let algebra = LieAlgebra { field, names, upper };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// Same as [`LieAlgebra::new`] with basis names `e1, ..., en`.
    pub fn with_default_names(field: Field, dim: usize, entries: Vec<BracketEntry>) -> Result<Self> {
        LieAlgebra::new(field, default_names(dim), entries)
    }

    /// Convenience constructor from integer structure constants.
    pub fn from_i64(field: Field, names: &[&str], entries: &[(usize, usize, &[i64])]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|(i, j, c)| (*i, *j, c.iter().map(|&v| field.from_i64(v)).collect()))
            .collect();
        LieAlgebra::new(field, names.iter().map(|s| s.to_string()).collect(), entries)
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.jacobiator(i, j, k);
                    if !is_zero_vector(&jac) {
                        return Err(Error::Jacobi {
                            triple: (i, j, k),
                            jacobiator: jac,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let e = |a| unit(self.field, n, a);
        let mut out = self.br(&e(i), &self.basis_bracket(j, k));
        for (a, b, c) in [(j, k, i), (k, i, j)] {
            let t = self.br(&e(a), &self.basis_bracket(b, c));
            add_into(&mut out, &t);
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch("name count differs from dimension".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// Structure constants ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.field == other.field && self.upper == other.upper
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[pair_index(n, j, i)].iter().map(|c| -c).collect(),
            std::cmp::Ordering::Equal => vec![self.field.zero(); n],
        }
    }

    /// Nonzero `[e_i, e_j]` for `i < j`, in lexicographic order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.upper[pair_index(n, i, j)];
                if !is_zero_vector(v) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit(self.field, self.dim(), i)
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in an algebra of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        if let Some(s) = v.first() {
            self.field.check(&s.field())?;
        }
        Ok(())
    }

    fn check_square(&self, m: &Matrix) -> Result<()> {
        self.field.check(&m.field())?;
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                self.dim(),
                m.rows(),
                m.cols()
            )));
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        self.field.check(&s.field())?;
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch("subspace of a different ambient space".into()));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.br(x, y))
    }

    /// Unchecked bracket of coordinate vectors.
    pub(crate) fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                if c.is_zero() {
                    continue;
                }
                for (o, s) in out.iter_mut().zip(&self.upper[pair_index(n, i, j)]) {
                    if !s.is_zero() {
                        *o += &(&c * s);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, -]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.br(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// `[A, B]`, the span of all brackets of elements of `a` and `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let bv = b.basis_vectors();
        let mut vectors = Vec::new();
        for x in a.basis_vectors() {
            for y in &bv {
                vectors.push(self.br(&x, y));
            }
        }
        Subspace::span(self.field, self.dim(), &vectors)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = self.entries().into_iter().map(|(_, _, v)| v).collect();
        Subspace::span(self.field, self.dim(), &vectors).expect("bracket vectors")
    }

    /// `L, [L,L], [[L,L],[L,L]], ...` up to and including the first repeat.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full_space()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(last, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space()).expect("same ambient")
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        let sv = s.basis_vectors();
        let mut rows = Vec::new();
        for v in &sv {
            // Equation k: sum_i x_i [e_i, v]_k = 0.
            let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.br(&self.basis_vector(i), v)).collect();
            for k in 0..n {
                rows.push(images.iter().map(|img| img[k].clone()).collect::<Vec<_>>());
            }
        }
        if rows.is_empty() {
            return Ok(self.full_space());
        }
        Ok(Matrix::from_rows(self.field, &rows)?.kernel())
    }

    pub fn is_abelian(&self) -> bool {
        self.entries().is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().is_full()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// Space of derivations, as row-major flattened `n x n` matrices whose
    /// column `j` is `D(e_j)`.
    pub fn derivations(&self) -> Subspace {
        let n = self.dim();
        let zero = self.field.zero();
        let consts: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| (0..n).map(|j| self.basis_bracket(i, j)).collect())
            .collect();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], coordinate k.
                    let mut row = vec![zero.clone(); n * n];
                    for b in 0..n {
                        row[k * n + b] += &consts[i][j][b];
                    }
                    for a in 0..n {
                        row[a * n + i] -= &consts[a][j][k];
                        row[a * n + j] -= &consts[i][a][k];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.field, n * n);
        }
        Matrix::from_rows(self.field, &rows).expect("rows").kernel()
    }

    pub fn is_derivation(&self, d: &Matrix) -> Result<bool> {
        self.check_square(d)?;
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.basis_bracket(i, j));
                let mut rhs = self.br(&d.column(i), &self.basis_vector(j));
                add_into(&mut rhs, &self.br(&self.basis_vector(i), &d.column(j)));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Span of all `ad_x`, flattened like [`LieAlgebra::derivations`].
    pub fn inner_derivations(&self) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| flatten(&self.ad(&self.basis_vector(i)).expect("basis vector")))
            .collect();
        Subspace::span(self.field, self.dim() * self.dim(), &vectors).expect("flattened")
    }

    /// Some `x` with `ad_x = d`, unique modulo the center, or `None`.
    pub fn is_inner(&self, d: &Matrix) -> Result<Option<Vec<Scalar>>> {
        self.check_square(d)?;
        let n = self.dim();
        // Unknown x; equation (k, j): sum_i x_i [e_i, e_j]_k = d_kj.
        let mut a = Matrix::zeros(self.field, n * n, n);
        let mut b = Matrix::zeros(self.field, n * n, 1);
        for j in 0..n {
            for i in 0..n {
                let v = self.basis_bracket(i, j);
                for k in 0..n {
                    a.set(k * n + j, i, v[k].clone());
                }
            }
            for k in 0..n {
                b.set(k * n + j, 0, d.get(k, j).clone());
            }
        }
        Ok(match a.solve(&b)? {
            crate::linalg::Solution::Consistent { particular, .. } => Some(particular.column(0)),
            crate::linalg::Solution::Inconsistent => None,
        })
    }

    pub fn flags(&self) -> StructuralFlags {
        let center_dim = self.center().dim();
        let derivation_dim = self.derivations().dim();
        let inner_derivation_dim = self.inner_derivations().dim();
        let series = self.derived_series();
        let perfect = self.is_perfect();
        let complete = center_dim == 0 && derivation_dim == inner_derivation_dim;
        StructuralFlags {
            abelian: self.is_abelian(),
            perfect,
            solvable: series.last().is_some_and(Subspace::is_zero),
            complete,
            sympathetic: perfect && complete,
            center_dim,
            derivation_dim,
            inner_derivation_dim,
            derived_series_dims: series.iter().map(Subspace::dim).collect(),
        }
    }

    /// True iff `m` maps brackets in `self` to brackets in `target`.
    pub fn is_homomorphism(&self, target: &LieAlgebra, m: &Matrix) -> Result<bool> {
        self.field.check(&m.field())?;
        if m.cols() != self.dim() || m.rows() != target.dim() {
            return Err(Error::DimensionMismatch("map shape does not match the algebras".into()));
        }
        let images = m.columns();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if m.mul_vec(&self.basis_bracket(i, j)) != target.br(&images[i], &images[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_automorphism(&self, m: &Matrix) -> Result<bool> {
        self.check_square(m)?;
        Ok(m.is_invertible() && self.is_homomorphism(self, m)?)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        let br = self.bracket_span(s, s)?;
        br.is_subspace_of(s)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let br = self.bracket_span(&self.full_space(), s)?;
        br.is_subspace_of(s)
    }

    /// The algebra induced on the span of `basis` (which must be linearly
    /// independent and closed under the bracket), in that basis.
    pub fn induced(&self, basis: &[Vec<Scalar>], names: Vec<String>) -> Result<LieAlgebra> {
        let k = basis.len();
        if names.len() != k {
            return Err(Error::DimensionMismatch("name count differs from basis size".into()));
        }
        for v in basis {
            self.check_vector(v)?;
        }
        let frame = Matrix::from_columns(self.field, self.dim(), basis)?;
        if frame.rank() != k {
            return Err(Error::InvalidParameter("basis vectors are linearly dependent".into()));
        }
        let mut brackets = Vec::new();
        let mut rhs_cols = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                brackets.push((i, j));
                rhs_cols.push(self.br(&basis[i], &basis[j]));
            }
        }
        let mut entries = Vec::new();
        if !brackets.is_empty() {
            let rhs = Matrix::from_columns(self.field, self.dim(), &rhs_cols)?;
            let crate::linalg::Solution::Consistent { particular, .. } = frame.solve(&rhs)? else {
                return Err(Error::NotSubalgebra);
            };
            for (c, (i, j)) in brackets.into_iter().enumerate() {
                let v = particular.column(c);
                if !is_zero_vector(&v) {
                    entries.push((i, j, v));
                }
            }
        }
        LieAlgebra::new(self.field, names, entries)
    }

    /// The subalgebra on `s`, in its canonical basis. Basis vectors that are
    /// standard unit vectors keep their names.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        let names = vector_names(self, &basis, "s");
        self.induced(&basis, names)
    }

    /// Direct sum `self + other` with brackets between the summands zero.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        self.field.check(&other.field)?;
        let (n, m) = (self.dim(), other.dim());
        let mut entries = Vec::new();
        for (i, j, v) in self.entries() {
            let mut w = v;
            w.resize(n + m, self.field.zero());
            entries.push((i, j, w));
        }
        for (i, j, v) in other.entries() {
            let mut w = vec![self.field.zero(); n];
            w.extend(v);
            entries.push((n + i, n + j, w));
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        LieAlgebra::new(self.field, names, entries)
    }
}

/// Names for a list of vectors: the basis name when a vector is a standard
/// unit vector, otherwise `{prefix}{index}`.
pub(crate) fn vector_names(l: &LieAlgebra, vectors: &[Vec<Scalar>], prefix: &str) -> Vec<String> {
    vectors
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            match nz.as_slice() {
                [i] if v[*i].is_one() => l.names()[*i].clone(),
                _ => format!("{prefix}{}", idx + 1),
            }
        })
        .collect()
}

pub(crate) fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// Row-major entries of a matrix.
pub fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// Inverse of [`flatten`] for square matrices.
pub fn unflatten(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    let rows: Vec<Vec<Scalar>> = v.chunks(n).map(<[Scalar]>::to_vec).collect();
    if rows.is_empty() {
        return Matrix::zeros(field, 0, 0);
    }
    Matrix::from_rows(field, &rows).expect("square chunks")
}

/// `sum_i c_i e_i` from integer coefficients.
pub fn lin(field: Field, n: usize, terms: &[(usize, i64)]) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    for &(i, c) in terms {
        v[i] += &field.from_i64(c);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn sl2(field: Field) -> LieAlgebra {
        LieAlgebra::from_i64(
            field,
            &["e1", "e2", "e3"],
            &[(0, 1, &[0, 0, 1]), (0, 2, &[-2, 0, 0]), (1, 2, &[0, 2, 0])],
        )
        .unwrap()
    }

    #[test]
    fn aff2_and_sl2_are_valid() {
        let q = Field::rationals();
        assert!(LieAlgebra::from_i64(q, &["e1", "e2"], &[(0, 1, &[0, 1])]).is_ok());
        assert_eq!(sl2(q).dim(), 3);
    }

    #[test]
    fn jacobi_failure_reports_triple_and_jacobiator() {
        let q = Field::rationals();
        let err = LieAlgebra::from_i64(
            q,
            &["e1", "e2", "e3"],
            &[(0, 1, &[0, 0, 1]), (0, 2, &[1, 0, 0]), (1, 2, &[0, 1, 0])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Jacobi {
                triple: (0, 1, 2),
                jacobiator: vector(q, &[0, 0, 2]),
            }
        );
    }

    #[test]
    fn construction_guards() {
        let q = Field::rationals();
        let dup = LieAlgebra::from_i64(q, &["a", "b"], &[(0, 1, &[0, 1]), (1, 0, &[0, -1])]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateEntry(0, 1));
        assert!(matches!(
            LieAlgebra::from_i64(q, &["a", "b"], &[(0, 2, &[0, 1])]),
            Err(Error::BadIndex(_))
        ));
        assert!(matches!(
            LieAlgebra::from_i64(q, &["a", "b"], &[(1, 1, &[0, 1])]),
            Err(Error::BadIndex(_))
        ));
        let rev = LieAlgebra::from_i64(q, &["a", "b"], &[(1, 0, &[0, -1])]).unwrap();
        assert_eq!(rev.basis_bracket(0, 1), vector(q, &[0, 1]));
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let l = sl2(f(7));
        let x = vector(f(7), &[1, 2, 3]);
        let y = vector(f(7), &[4, 0, 6]);
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        assert_eq!(xy, yx.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(is_zero_vector(&l.bracket(&x, &x).unwrap()));
        assert!(l.bracket(&x, &vector(f(7), &[1])).is_err());
    }

    #[test]
    fn sl2_structure() {
        let l = sl2(f(5));
        let flags = l.flags();
        assert!(flags.perfect && flags.complete && flags.sympathetic);
        assert!(!flags.solvable);
        assert_eq!(flags.center_dim, 0);
        assert_eq!(flags.derivation_dim, 3);
    }

    #[test]
    fn aff2_derived_series() {
        let l = LieAlgebra::from_i64(Field::rationals(), &["e1", "e2"], &[(0, 1, &[0, 1])]).unwrap();
        let dims: Vec<usize> = l.derived_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1, 0]);
        assert!(l.is_solvable());
    }

    #[test]
    fn abelian_structure() {
        let l = LieAlgebra::with_default_names(Field::rationals(), 3, vec![]).unwrap();
        assert!(l.derived_subalgebra().is_zero());
        assert!(l.center().is_full());
        let flags = l.flags();
        assert!(flags.abelian && flags.solvable && !flags.perfect && !flags.sympathetic);
    }

    #[test]
    fn sl2_torus_automorphism() {
        let k = f(5);
        let l = sl2(k);
        for u in 1..5 {
            let uinv = k.from_i64(u).inv().unwrap().residue().unwrap() as i64;
            let m = Matrix::from_i64(k, 3, 3, &[u, 0, 0, 0, uinv, 0, 0, 0, 1]);
            assert!(l.is_automorphism(&m).unwrap());
        }
        let m = Matrix::from_i64(k, 3, 3, &[2, 0, 0, 0, 2, 0, 0, 0, 1]);
        assert!(!l.is_automorphism(&m).unwrap());
        assert!(l.is_automorphism(&Matrix::identity(k, 3)).unwrap());
    }

    #[test]
    fn inner_derivation_witness() {
        let k = f(5);
        let l = sl2(k);
        let x = vector(k, &[1, 2, 3]);
        let ad = l.ad(&x).unwrap();
        assert!(l.is_derivation(&ad).unwrap());
        let w = l.is_inner(&ad).unwrap().unwrap();
        assert_eq!(l.ad(&w).unwrap(), ad);
    }

    #[test]
    fn induced_and_restrict() {
        let k = f(5);
        let l = sl2(k);
        let s = Subspace::coordinate(k, 3, &[0, 2]).unwrap();
        let b = l.restrict(&s).unwrap();
        assert_eq!(b.names(), &["e1".to_string(), "e3".to_string()]);
        assert_eq!(b.basis_bracket(0, 1), vector(k, &[-2, 0]));
        let not_closed = Subspace::coordinate(k, 3, &[0, 1]).unwrap();
        assert!(!l.is_subalgebra(&not_closed).unwrap());
        assert_eq!(l.restrict(&not_closed).unwrap_err(), Error::NotSubalgebra);
    }
}
