//! Two independent enumerators of `Gal(h/g)` over a prime field.
//!
//! The structured one solves the linear conditions (G1), (G2) on `(sigma, r)`
//! and filters the affine solution space by `det sigma != 0`, (G3) and (G4).
//! The direct one scans every block matrix `[[I, R], [0, S]]` in the frame
//! basis and keeps the Lie automorphisms.

use super::fp::{bracket_table, residue, Fp, Odometer, SystemTables};
use super::GaloisGroup;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Solution};
use crate::par::{scan_chunks, Parallelism};
use crate::products::{canonical_extending_system, ExtendingSystem, Extension};

pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest number of candidates an enumerator may visit.
    pub budget: u128,
    pub parallelism: Parallelism,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_BUDGET,
            parallelism: Parallelism::default(),
        }
    }
}

impl EnumerationOptions {
    pub fn sequential() -> Self {
        EnumerationOptions {
            parallelism: Parallelism::Sequential,
            ..Default::default()
        }
    }

    pub fn with_budget(self, budget: u128) -> Self {
        EnumerationOptions { budget, ..self }
    }
}

pub(crate) fn prime_of(field: Field) -> Result<u32> {
    field.modulus().ok_or_else(|| Error::InfiniteField(field.to_string()))
}

/// `p^len` candidates, checked against the budget.
pub(crate) fn candidate_count(p: u32, len: usize, budget: u128) -> Result<u64> {
    let count = u32::try_from(len).ok().and_then(|l| (p as u128).checked_pow(l));
    match count {
        Some(c) if c <= budget && c <= u64::MAX as u128 => Ok(c as u64),
        Some(c) => Err(Error::BudgetExceeded {
            count: c.to_string(),
            budget,
        }),
        None => Err(Error::BudgetExceeded {
            count: format!("{p}^{len}"),
            budget,
        }),
    }
}

/// Scans `particular + span(kernel)` and keeps the vectors accepted by `keep`.
pub(crate) fn scan_affine<F>(
    p: u32,
    particular: &[u32],
    kernel: &[Vec<u32>],
    options: &EnumerationOptions,
    keep: F,
) -> Result<Vec<Vec<u32>>>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
{
    let f = Fp { p };
    let count = candidate_count(p, kernel.len(), options.budget)?;
    Ok(scan_chunks(count, options.parallelism, |range, out| {
        let mut odo = Odometer::at(range.start, kernel.len(), p);
        let mut v = vec![0; particular.len()];
        for _ in range {
            v.copy_from_slice(particular);
            for (d, k) in odo.digits.iter().zip(kernel) {
                if *d != 0 {
                    for (vi, ki) in v.iter_mut().zip(k) {
                        *vi = f.mac(*vi, *d, *ki);
                    }
                }
            }
            if keep(&v) {
                out.push(v.clone());
            }
            odo.advance();
        }
    }))
}

/// A particular solution and a kernel basis, in residues.
type AffineSolutions = (Vec<u32>, Vec<Vec<u32>>);

/// Solves `a X = b` for a single column and returns the affine solution set
/// in residues, or `None` when inconsistent.
pub(crate) fn affine_solutions(a: &Matrix, b: &Matrix) -> Result<Option<AffineSolutions>> {
    Ok(match a.solve(b)? {
        Solution::Inconsistent => None,
        Solution::Consistent { particular, kernel } => Some((
            particular.column(0).iter().map(residue).collect(),
            kernel
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(residue).collect())
                .collect(),
        )),
    })
}

/// Coefficient matrix of (G1) and (G2) in the unknowns `sigma` (row-major,
/// `sigma[z*m + x]`) and `r` (row-major, at `m*m + a*m + x`).
fn linear_conditions(sys: &ExtendingSystem) -> (Matrix, Matrix) {
    let (n, m) = (sys.g_dim(), sys.v_dim());
    let field = sys.field();
    let unknowns = m * m + n * m;
    let s_at = |z: usize, x: usize| z * m + x;
    let r_at = |a: usize, x: usize| m * m + a * m + x;
    let g = sys.g();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for x in 0..m {
        for a in 0..n {
            let xa = sys.left(x, a);
            // (G1), component z: sum_y (x<-a)_y sigma_zy - sum_w sigma_wx (e_w<-a)_z = 0
            for z in 0..m {
                let mut row = vec![field.zero(); unknowns];
                for (y, c) in xa.iter().enumerate() {
                    row[s_at(z, y)] += c;
                }
                for w in 0..m {
                    row[s_at(w, x)] -= &sys.left(w, a)[z];
                }
                rows.push(row);
                rhs.push(field.zero());
            }
            // (G2), component b:
            // r(x<-a)_b - [r(x), a]_b - (sigma(x) -> a)_b = -(x -> a)_b
            for b in 0..n {
                let mut row = vec![field.zero(); unknowns];
                for (y, c) in xa.iter().enumerate() {
                    row[r_at(b, y)] += c;
                }
                for c in 0..n {
                    row[r_at(c, x)] -= &g.basis_bracket(c, a)[b];
                }
                for w in 0..m {
                    row[s_at(w, x)] -= &sys.right(w, a)[b];
                }
                rows.push(row);
                rhs.push(-sys.right(x, a)[b].clone());
            }
        }
    }
    if rows.is_empty() {
        return (Matrix::zeros(field, 0, unknowns), Matrix::zeros(field, 0, 1));
    }
    let a = Matrix::from_rows(field, &rows).expect("rows have equal length");
    let b = Matrix::from_columns(field, rhs.len(), &[rhs]).expect("column length matches");
    (a, b)
}

/// (G3) and (G4) on a residue key, for all `x < y`.
fn quadratic_conditions(t: &SystemTables, f: Fp, key: &[u32]) -> bool {
    let (n, m) = (t.n, t.m);
    let (s, r) = key.split_at(m * m);
    let sc = |x: usize, z: usize| s[z * m + x];
    let rc = |x: usize, a: usize| r[a * m + x];
    for x in 0..m {
        for y in x + 1..m {
            let q = &t.quasi[(x * m + y) * m..(x * m + y + 1) * m];
            // (G3)
            for z in 0..m {
                let mut lhs = 0;
                for (w, &qw) in q.iter().enumerate() {
                    lhs = f.mac(lhs, s[z * m + w], qw);
                }
                let mut rhs = 0;
                for u in 0..m {
                    let (su, sx_u) = (sc(y, u), sc(x, u));
                    for v in 0..m {
                        let c = t.quasi[(u * m + v) * m + z];
                        if c != 0 {
                            rhs = f.mac(rhs, f.mul(sx_u, sc(y, v)), c);
                        }
                    }
                    for a in 0..n {
                        let c = t.left[(u * n + a) * m + z];
                        if c != 0 {
                            rhs = f.mac(rhs, f.mul(sx_u, rc(y, a)), c);
                            rhs = f.sub(rhs, f.mul(f.mul(su, rc(x, a)), c));
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
            // (G4)
            for b in 0..n {
                let mut lhs = 0;
                for (w, &qw) in q.iter().enumerate() {
                    lhs = f.mac(lhs, r[b * m + w], qw);
                }
                let mut rhs = f.sub(0, t.theta[(x * m + y) * n + b]);
                for a in 0..n {
                    for c in 0..n {
                        let k = t.br[(a * n + c) * n + b];
                        if k != 0 {
                            rhs = f.mac(rhs, f.mul(rc(x, a), rc(y, c)), k);
                        }
                    }
                }
                for u in 0..m {
                    for a in 0..n {
                        let k = t.right[(u * n + a) * n + b];
                        if k != 0 {
                            rhs = f.mac(rhs, f.mul(sc(x, u), rc(y, a)), k);
                            rhs = f.sub(rhs, f.mul(f.mul(sc(y, u), rc(x, a)), k));
                        }
                    }
                    for v in 0..m {
                        let k = t.theta[(u * m + v) * n + b];
                        if k != 0 {
                            rhs = f.mac(rhs, f.mul(sc(x, u), sc(y, v)), k);
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `Gal(h/g)` through the linear conditions (G1), (G2) on the canonical
/// system, then the quadratic ones.
pub fn galois_group_structured(ext: &Extension, options: &EnumerationOptions) -> Result<GaloisGroup> {
    galois_group_of_system(&canonical_extending_system(ext), options)
}

/// Same as [`galois_group_structured`] for an arbitrary extending system.
pub fn galois_group_of_system(sys: &ExtendingSystem, options: &EnumerationOptions) -> Result<GaloisGroup> {
    let field = sys.field();
    let p = prime_of(field)?;
    let f = Fp { p };
    let (n, m) = (sys.g_dim(), sys.v_dim());
    let (a, b) = linear_conditions(sys);
    let (particular, kernel) = affine_solutions(&a, &b)?
        .ok_or_else(|| Error::Internal("the identity pair always satisfies (G1) and (G2)".into()))?;
    let tables = SystemTables::new(sys);
    let keys = scan_affine(p, &particular, &kernel, options, |key| {
        f.det(&key[..m * m], m) != 0 && quadratic_conditions(&tables, f, key)
    })?;
    Ok(GaloisGroup::from_keys(field, n, m, keys))
}

/// `Gal(h/g)` by brute force over all block matrices in the frame basis.
pub fn galois_group_direct(ext: &Extension, options: &EnumerationOptions) -> Result<GaloisGroup> {
    let field = ext.field();
    let p = prime_of(field)?;
    let f = Fp { p };
    let (n, m) = (ext.g_dim(), ext.v_dim());
    let d = n + m;
    let names = (0..d).map(|i| format!("f{}", i + 1)).collect();
    let framed = ext.ambient().induced(&ext.frame().columns(), names)?;
    let c = bracket_table(&framed);
    let count = candidate_count(p, d * m, options.budget)?;
    let keys = scan_chunks(count, options.parallelism, |range, out| {
        let mut odo = Odometer::at(range.start, d * m, p);
        let mut s = vec![0; m * m];
        for _ in range {
            // column x of the moving block occupies digits [x*d, (x+1)*d)
            for x in 0..m {
                for z in 0..m {
                    s[z * m + x] = odo.digits[x * d + n + z];
                }
            }
            if f.det(&s, m) != 0 && block_is_automorphism(&c, f, n, d, &odo.digits) {
                let mut key = s.clone();
                for a in 0..n {
                    for x in 0..m {
                        key.push(odo.digits[x * d + a]);
                    }
                }
                out.push(key);
            }
            odo.advance();
        }
    });
    Ok(GaloisGroup::from_keys(field, n, m, keys))
}

/// `M[e_i, e_j] = [M e_i, M e_j]` for `i < j`, `j >= n`, where `M` fixes the
/// first `n` basis vectors and sends `e_(n+x)` to `cols[x*d..(x+1)*d]`.
fn block_is_automorphism(c: &[u32], f: Fp, n: usize, d: usize, cols: &[u32]) -> bool {
    let col = |k: usize| &cols[(k - n) * d..(k - n + 1) * d];
    let image = |k: usize, out: &mut [u32]| {
        if k < n {
            out.fill(0);
            out[k] = 1;
        } else {
            out.copy_from_slice(col(k));
        }
    };
    let (mut mi, mut mj) = (vec![0; d], vec![0; d]);
    for j in n..d {
        image(j, &mut mj);
        for i in 0..j {
            image(i, &mut mi);
            for out in 0..d {
                let mut lhs = 0;
                for k in 0..d {
                    let cij = c[(i * d + j) * d + k];
                    if cij != 0 {
                        let mk = if k < n { (k == out) as u32 } else { col(k)[out] };
                        lhs = f.mac(lhs, cij, mk);
                    }
                }
                let mut rhs = 0;
                for (a, &xa) in mi.iter().enumerate() {
                    if xa == 0 {
                        continue;
                    }
                    for (b, &yb) in mj.iter().enumerate() {
                        if yb != 0 {
                            rhs = f.mac(rhs, f.mul(xa, yb), c[(a * d + b) * d + out]);
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
