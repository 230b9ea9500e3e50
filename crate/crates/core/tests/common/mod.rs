//! Brute-force oracles shared by the integration tests. These deliberately
//! avoid the library's elimination and enumeration code paths.

#![allow(clippy::needless_range_loop, dead_code)]

use liegal::{Field, LieAlgebra, Matrix, Scalar, Subspace};

/// Every vector of `F_p^n`, in lexicographic order.
pub fn all_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements().expect("finite field");
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

pub fn matrices(field: Field, rows: usize, cols: usize) -> impl Iterator<Item = Matrix> {
    all_vectors(field, rows * cols).into_iter().map(move |v| {
        let rows_v: Vec<Vec<Scalar>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        Matrix::from_rows(field, &rows_v).unwrap()
    })
}

/// Naive bracket straight from the structure constants.
pub fn naive_bracket(l: &LieAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = l.dim();
    let mut out = vec![l.field().zero(); n];
    for i in 0..n {
        for j in 0..n {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let c = l.basis_bracket(i, j);
            for k in 0..n {
                out[k] = &out[k] + &(&(&x[i] * &y[j]) * &c[k]);
            }
        }
    }
    out
}

pub fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| {
            let mut acc = m.field().zero();
            for (j, vj) in v.iter().enumerate() {
                acc = &acc + &(m.get(i, j) * vj);
            }
            acc
        })
        .collect()
}

/// Whether `m` preserves all basis brackets; invertibility is checked by
/// the caller.
pub fn preserves_brackets(l: &LieAlgebra, m: &Matrix) -> bool {
    let n = l.dim();
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if apply(m, &l.basis_bracket(i, j)) != naive_bracket(l, &cols[i], &cols[j]) {
                return false;
            }
        }
    }
    true
}

/// Whether `v` lies in the span of `basis`, by scanning all combinations.
pub fn in_span(field: Field, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    all_vectors(field, basis.len()).iter().any(|c| {
        let mut acc = vec![field.zero(); v.len()];
        for (ci, b) in c.iter().zip(basis) {
            for (a, x) in acc.iter_mut().zip(b) {
                *a = &*a + &(ci * x);
            }
        }
        acc == v
    })
}

/// All vectors of a subspace, by scanning the ambient space.
pub fn members(field: Field, s: &Subspace) -> usize {
    let basis = s.basis_vectors();
    all_vectors(field, s.ambient_dim())
        .iter()
        .filter(|v| in_span(field, &basis, v))
        .count()
}

/// Count of automorphisms of `h` fixing `g` pointwise, by scanning every
/// matrix on `h` whose columns at the basis of `g` are forced.
pub fn count_fixing_automorphisms(h: &LieAlgebra, g: &Subspace) -> usize {
    let field = h.field();
    let n = h.dim();
    let fixed = g.basis_vectors();
    matrices(field, n, n)
        .filter(|m| m.is_invertible())
        .filter(|m| fixed.iter().all(|v| apply(m, v) == *v))
        .filter(|m| preserves_brackets(h, m))
        .count()
}

pub fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}
