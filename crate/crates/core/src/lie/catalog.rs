//! Named Lie algebras.
//!
//! Basis orders:
//!
//! * `gl(m)`: `e_ij` in lexicographic order of `(i, j)`.
//! * `sl(m)`: off-diagonal `e_ij` in lexicographic order, then
//!   `h_i = e_ii - e_(i+1)(i+1)`. For `m = 2` this is `e1 = e_12`,
//!   `e2 = e_21`, `e3 = h_1`.
//! * `heisenberg(n)`: `x1..xn, y1..yn, w` with `[x_i, y_i] = w`.
//! * `l(n)`: `E1..En, F1..Fn, G` with `[E_i, G] = E_i`, `[G, F_i] = F_i`.
//! * `t(n)`, `b(n)`: `heisenberg(n)` followed by one adjoined generator.

use super::algebra::{flatten, lin, unflatten};
use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::products::{semidirect_product, single_extension, TwistedDerivation};

/// Names accepted by [`from_spec`].
pub const CATALOG_NAMES: &[&str] = &[
    "gl:m",
    "sl:m",
    "heisenberg:n",
    "l:n",
    "t:n",
    "t_table:n",
    "b:n",
    "b_table:n",
    "aff2",
    "fivedim_perfect",
    "fivedim_extended",
    "gl_kn:n",
    "abelian:n",
    "holomorph:<spec>",
];

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn strings(v: impl IntoIterator<Item = String>) -> Vec<String> {
    v.into_iter().collect()
}

pub fn abelian(field: Field, n: usize) -> Result<LieAlgebra> {
    LieAlgebra::with_default_names(field, n, vec![])
}

/// The two-dimensional non-abelian algebra `[e1, e2] = e2`.
pub fn aff2(field: Field) -> Result<LieAlgebra> {
    LieAlgebra::from_i64(field, &["e1", "e2"], &[(0, 1, &[0, 1])])
}

fn matrix_unit_names(m: usize) -> Vec<String> {
    let mut names = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            names.push(format!("e{i}{j}"));
        }
    }
    names
}

/// Commutator of matrix units `[e_ij, e_kl] = d_jk e_il - d_li e_kj` in
/// `gl(m)` coordinates.
fn unit_commutator(field: Field, m: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<Scalar> {
    let mut v = vec![field.zero(); m * m];
    if j == k {
        v[i * m + l] += &field.one();
    }
    if l == i {
        v[k * m + j] -= &field.one();
    }
    v
}

pub fn gl(field: Field, m: usize) -> Result<LieAlgebra> {
    require(m >= 1, "gl(m) needs m >= 1")?;
    let mut entries = Vec::new();
    for a in 0..m * m {
        for b in a + 1..m * m {
            let v = unit_commutator(field, m, (a / m, a % m), (b / m, b % m));
            if v.iter().any(|c| !c.is_zero()) {
                entries.push((a, b, v));
            }
        }
    }
    LieAlgebra::new(field, matrix_unit_names(m), entries)
}

/// Basis of `sl(m)` inside `gl(m)`, in catalog order.
pub fn sl_basis_in_gl(field: Field, m: usize) -> Vec<Vec<Scalar>> {
    let mut basis = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                basis.push(lin(field, m * m, &[(i * m + j, 1)]));
            }
        }
    }
    for i in 0..m.saturating_sub(1) {
        basis.push(lin(field, m * m, &[(i * m + i, 1), ((i + 1) * m + i + 1, -1)]));
    }
    basis
}

pub fn sl(field: Field, m: usize) -> Result<LieAlgebra> {
    require(m >= 2, "sl(m) needs m >= 2")?;
    let names = if m == 2 {
        strings(["e1", "e2", "e3"].map(String::from))
    } else {
        let mut names = Vec::new();
        for i in 1..=m {
            for j in 1..=m {
                if i != j {
                    names.push(format!("e{i}{j}"));
                }
            }
        }
        names.extend((1..m).map(|i| format!("h{i}")));
        names
    };
    gl(field, m)?.induced(&sl_basis_in_gl(field, m), names)
}

pub fn heisenberg(field: Field, n: usize) -> Result<LieAlgebra> {
    require(n >= 1, "heisenberg(n) needs n >= 1")?;
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("w".into());
    let d = 2 * n + 1;
    let entries = (0..n).map(|i| (i, n + i, lin(field, d, &[(2 * n, 1)]))).collect();
    LieAlgebra::new(field, names, entries)
}

/// `l(2n+1)`: `[E_i, G] = E_i`, `[G, F_i] = F_i`.
pub fn l(field: Field, n: usize) -> Result<LieAlgebra> {
    require(n >= 1, "l(n) needs n >= 1")?;
    let mut names: Vec<String> = (1..=n).map(|i| format!("E{i}")).collect();
    names.extend((1..=n).map(|i| format!("F{i}")));
    names.push("G".into());
    let d = 2 * n + 1;
    let g = 2 * n;
    let mut entries = Vec::new();
    for i in 0..n {
        entries.push((i, g, lin(field, d, &[(i, 1)])));
        entries.push((g, n + i, lin(field, d, &[(n + i, 1)])));
    }
    LieAlgebra::new(field, names, entries)
}

/// The twisted derivation of `heisenberg(n)` with `lambda(x_i) = lambda(y_i) = 1`,
/// `lambda(w) = 0`, `delta(x_i) = delta(y_i) = w`, `delta(w) = 0`.
pub fn t_twisted_derivation(field: Field, n: usize) -> Result<TwistedDerivation> {
    let h = heisenberg(field, n)?;
    let d = 2 * n + 1;
    let mut lambda = vec![field.one(); d];
    lambda[2 * n] = field.zero();
    let mut delta = Matrix::zeros(field, d, d);
    for j in 0..2 * n {
        delta.set(2 * n, j, field.one());
    }
    TwistedDerivation::new(&h, lambda, delta)
}

/// The derivation of `heisenberg(n)` with `delta(x_i) = y_i`.
pub fn b_derivation(field: Field, n: usize) -> Result<TwistedDerivation> {
    let h = heisenberg(field, n)?;
    let d = 2 * n + 1;
    let mut delta = Matrix::zeros(field, d, d);
    for i in 0..n {
        delta.set(n + i, i, field.one());
    }
    TwistedDerivation::new(&h, vec![field.zero(); d], delta)
}

/// `t(2n+2)`, built as the single extension of `heisenberg(n)` by
/// [`t_twisted_derivation`].
pub fn t(field: Field, n: usize) -> Result<LieAlgebra> {
    single_extension(&heisenberg(field, n)?, &t_twisted_derivation(field, n)?, "u")
}

/// `t(2n+2)` from its literal bracket list:
/// `[x_i, y_i] = w`, `[u, x_i] = [u, y_i] = w + u`.
pub fn t_table(field: Field, n: usize) -> Result<LieAlgebra> {
    let h = heisenberg(field, n)?;
    let d = 2 * n + 2;
    let (w, u) = (2 * n, 2 * n + 1);
    let mut names = h.names().to_vec();
    names.push("u".into());
    let mut entries = Vec::new();
    for i in 0..n {
        entries.push((i, n + i, lin(field, d, &[(w, 1)])));
    }
    for j in 0..2 * n {
        entries.push((u, j, lin(field, d, &[(w, 1), (u, 1)])));
    }
    LieAlgebra::new(field, names, entries)
}

/// `b(2n+2)`, the extension of `heisenberg(n)` by [`b_derivation`].
pub fn b(field: Field, n: usize) -> Result<LieAlgebra> {
    single_extension(&heisenberg(field, n)?, &b_derivation(field, n)?, "z")
}

/// `b(2n+2)` from its literal bracket list: `[x_i, y_i] = w`, `[z, x_i] = y_i`.
pub fn b_table(field: Field, n: usize) -> Result<LieAlgebra> {
    let h = heisenberg(field, n)?;
    let d = 2 * n + 2;
    let z = 2 * n + 1;
    let mut names = h.names().to_vec();
    names.push("z".into());
    let mut entries = Vec::new();
    for i in 0..n {
        entries.push((i, n + i, lin(field, d, &[(2 * n, 1)])));
        entries.push((z, i, lin(field, d, &[(n + i, 1)])));
    }
    LieAlgebra::new(field, names, entries)
}

/// The perfect five-dimensional algebra `sl(2)` plus a two-dimensional
/// module: `[e1,e2]=e3, [e1,e3]=-2e1, [e1,e5]=[e3,e4]=e4, [e2,e3]=2e2,
/// [e2,e4]=e5, [e3,e5]=-e5`.
pub fn fivedim_perfect(field: Field) -> Result<LieAlgebra> {
    LieAlgebra::from_i64(
        field,
        &["e1", "e2", "e3", "e4", "e5"],
        &[
            (0, 1, &[0, 0, 1, 0, 0]),
            (0, 2, &[-2, 0, 0, 0, 0]),
            (0, 4, &[0, 0, 0, 1, 0]),
            (1, 2, &[0, 2, 0, 0, 0]),
            (1, 3, &[0, 0, 0, 0, 1]),
            (2, 3, &[0, 0, 0, 1, 0]),
            (2, 4, &[0, 0, 0, 0, -1]),
        ],
    )
}

/// Outer derivation of [`fivedim_perfect`]:
/// `e1 -> e1 - e4`, `e2 -> -e2`, `e3 -> e5`, `e4 -> -e4`, `e5 -> -2 e5`.
pub fn fivedim_derivation(field: Field) -> Matrix {
    // Column j is the image of e_j.
    #[rustfmt::skip]
    let entries = [
        1, 0, 0, 0, 0,
        0, -1, 0, 0, 0,
        0, 0, 0, 0, 0,
        -1, 0, 0, -1, 0,
        0, 0, 1, 0, -2,
    ];
    Matrix::from_i64(field, 5, 5, &entries)
}

/// `g_(delta)` for `g` = [`fivedim_perfect`] and `delta` =
/// [`fivedim_derivation`], with adjoined generator `d`.
pub fn fivedim_extended(field: Field) -> Result<LieAlgebra> {
    let g = fivedim_perfect(field)?;
    let tw = TwistedDerivation::new(&g, vec![field.zero(); 5], fivedim_derivation(field))?;
    single_extension(&g, &tw, "d")
}

/// `g x Der(g)` with `[(g,phi),(h,psi)] = ([g,h] + phi(h) - psi(g), [phi,psi])`.
/// The derivation part uses the canonical basis of the derivation space,
/// named `d1, d2, ...`.
pub fn holomorph(g: &LieAlgebra) -> Result<LieAlgebra> {
    let field = g.field();
    let n = g.dim();
    let der = g.derivations();
    let ds: Vec<Matrix> = der
        .basis_vectors()
        .iter()
        .map(|v| unflatten(field, n, v))
        .collect();
    let k = ds.len();
    let total = n + k;
    let pad = |v: Vec<Scalar>, offset: usize| {
        let mut w = vec![field.zero(); total];
        for (i, c) in v.into_iter().enumerate() {
            w[offset + i] = c;
        }
        w
    };
    let mut entries = Vec::new();
    for (i, j, v) in g.entries() {
        entries.push((i, j, pad(v, 0)));
    }
    for i in 0..n {
        for (s, d) in ds.iter().enumerate() {
            let img: Vec<Scalar> = d.column(i).iter().map(|c| -c).collect();
            if img.iter().any(|c| !c.is_zero()) {
                entries.push((i, n + s, pad(img, 0)));
            }
        }
    }
    for s in 0..k {
        for t in s + 1..k {
            let comm = (&ds[s] * &ds[t]).checked_sub(&(&ds[t] * &ds[s]))?;
            let coords = der
                .coordinates(&flatten(&comm))?
                .ok_or_else(|| Error::Internal("derivations not closed under commutator".into()))?;
            if coords.iter().any(|c| !c.is_zero()) {
                entries.push((n + s, n + t, pad(coords, n)));
            }
        }
    }
    let mut names = g.names().to_vec();
    names.extend((1..=k).map(|i| format!("d{i}")));
    LieAlgebra::new(field, names, entries)
}

/// `gl(n) x k^n` with `V = k^n` an abelian ideal and right action
/// `x <- A = xA` on row vectors.
pub fn gl_kn(field: Field, n: usize) -> Result<LieAlgebra> {
    require(n >= 1, "gl_kn(n) needs n >= 1")?;
    let g = gl(field, n)?;
    let v = abelian(field, n)?.with_names((1..=n).map(|i| format!("v{i}")).collect())?;
    // x e_ij has x_i in position j: the matrix of x |-> x e_ij sends e_i to e_j.
    let action: Vec<Matrix> = (0..n * n)
        .map(|a| {
            let mut m = Matrix::zeros(field, n, n);
            m.set(a % n, a / n, field.one());
            m
        })
        .collect();
    semidirect_product(&g, &v, &action)
}

/// Parses `name` or `name:param` and builds the algebra. `holomorph:<spec>`
/// takes another catalog spec, e.g. `holomorph:sl:2`.
pub fn from_spec(spec: &str, field: Field) -> Result<LieAlgebra> {
    let spec = spec.trim();
    let (name, rest) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    if name == "holomorph" {
        let inner = rest.ok_or_else(|| Error::InvalidParameter("holomorph needs an inner spec".into()))?;
        return holomorph(&from_spec(inner, field)?);
    }
    let param = || -> Result<usize> {
        rest.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter, e.g. {name}:2")))?
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad parameter in {spec:?}")))
    };
    match name {
        "gl" => gl(field, param()?),
        "sl" => sl(field, param()?),
        "heisenberg" => heisenberg(field, param()?),
        "l" => l(field, param()?),
        "t" => t(field, param()?),
        "t_table" => t_table(field, param()?),
        "b" => b(field, param()?),
        "b_table" => b_table(field, param()?),
        "aff2" => aff2(field),
        "fivedim_perfect" => fivedim_perfect(field),
        "fivedim_extended" => fivedim_extended(field),
        "gl_kn" => gl_kn(field, param()?),
        "abelian" => abelian(field, param()?),
        _ => Err(Error::InvalidParameter(format!(
            "unknown catalog algebra {name:?}; known: {}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

/// Indices of the copy of `heisenberg(n-1)` inside `heisenberg(n)`, or of
/// `l(n-1)` inside `l(n)`: all basis vectors except `x_n, y_n` (resp.
/// `E_n, F_n`).
pub fn nested_indices(n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n - 1).collect();
    idx.extend(n..2 * n - 1);
    idx.push(2 * n);
    idx
}

/// Subspace spanned by the first `k` basis vectors.
pub fn leading(field: Field, dim: usize, k: usize) -> Subspace {
    Subspace::coordinate(field, dim, &(0..k).collect::<Vec<_>>()).expect("k <= dim")
}
