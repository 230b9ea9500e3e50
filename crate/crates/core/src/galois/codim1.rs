//! The codimension-one Galois group of `g` inside `g_(lambda, Delta)`.

use super::enumerate::{affine_solutions, candidate_count, prime_of, scan_affine, EnumerationOptions};
use super::GaloisGroup;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Scalar};
use crate::products::TwistedDerivation;

/// All pairs `(u, g0)` with `u` a unit and
/// `lambda(b) g0 - [g0, b] = (u - 1) Delta(b)` for every basis vector `b`.
///
/// The result is a [`GaloisGroup`] with `dim V = 1`: `sigma = (u)` and
/// `r = g0`, multiplied as `(u, g0)(u', g0') = (u u', u' g0 + g0')`.
pub fn codim1_group(g: &LieAlgebra, tw: &TwistedDerivation, options: &EnumerationOptions) -> Result<GaloisGroup> {
    let field = g.field();
    let p = prime_of(field)?;
    let n = g.dim();
    if tw.lambda().len() != n || tw.delta().rows() != n || tw.delta().cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "twisted derivation does not act on a {n}-dimensional algebra"
        )));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
    for b in 0..n {
        for c in 0..n {
            let mut row = vec![field.zero(); n];
            row[c] += &tw.lambda()[b];
            for (a, entry) in row.iter_mut().enumerate() {
                *entry -= &g.basis_bracket(a, b)[c];
            }
            rows.push(row);
        }
    }
    let lhs = if rows.is_empty() {
        Matrix::zeros(field, 0, n)
    } else {
        Matrix::from_rows(field, &rows)?
    };
    let mut keys = Vec::new();
    let mut visited: u128 = 0;
    for u in 1..p {
        let shift = field.from_i64(u as i64 - 1);
        let rhs: Vec<Scalar> = (0..n)
            .flat_map(|b| (0..n).map(move |c| (b, c)))
            .map(|(b, c)| &shift * tw.delta().get(c, b))
            .collect();
        let rhs = Matrix::from_columns(field, rhs.len(), &[rhs])?;
        let Some((particular, kernel)) = affine_solutions(&lhs, &rhs)? else {
            continue;
        };
        let step = options.with_budget(options.budget - visited);
        visited += candidate_count(p, kernel.len(), step.budget)? as u128;
        for g0 in scan_affine(p, &particular, &kernel, &step, |_| true)? {
            let mut key = vec![u];
            key.extend(g0);
            keys.push(key);
        }
    }
    Ok(GaloisGroup::from_keys(field, n, 1, keys))
}
