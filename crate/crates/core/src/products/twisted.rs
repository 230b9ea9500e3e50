use super::{unified_product, ExtendingSystem};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Scalar};

/// A pair `(lambda, delta)` with `lambda([g,h]) = 0` and
/// `delta[g,h] = [delta g, h] + [g, delta h] + lambda(g) delta(h) - lambda(h) delta(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDerivation {
    lambda: Vec<Scalar>,
    delta: Matrix,
}

/// Checks both defining identities on basis pairs.
pub fn twisted_derivation_check(g: &LieAlgebra, lambda: &[Scalar], delta: &Matrix) -> Result<bool> {
    Ok(twisted_defect(g, lambda, delta)?.is_none())
}

fn twisted_defect(g: &LieAlgebra, lambda: &[Scalar], delta: &Matrix) -> Result<Option<String>> {
    let n = g.dim();
    g.check_vector(lambda)?;
    g.field().check(&delta.field())?;
    if delta.rows() != n || delta.cols() != n {
        return Err(Error::DimensionMismatch(format!("delta must be {n}x{n}")));
    }
    let names = g.names();
    let lam = |v: &[Scalar]| {
        v.iter()
            .zip(lambda)
            .fold(g.field().zero(), |acc, (a, b)| acc + a * b)
    };
    for i in 0..n {
        for j in i + 1..n {
            let bij = g.basis_bracket(i, j);
            if !lam(&bij).is_zero() {
                return Ok(Some(format!("lambda([{}, {}]) != 0", names[i], names[j])));
            }
            let (di, dj) = (delta.column(i), delta.column(j));
            let lhs = delta.mul_vec(&bij);
            let mut rhs = g.br(&di, &g.basis_vector(j));
            let t = g.br(&g.basis_vector(i), &dj);
            for k in 0..n {
                rhs[k] = &(&(&rhs[k] + &t[k]) + &(&lambda[i] * &dj[k])) - &(&lambda[j] * &di[k]);
            }
            if lhs != rhs {
                return Ok(Some(format!("twisted Leibniz rule fails on ({}, {})", names[i], names[j])));
            }
        }
    }
    Ok(None)
}

impl TwistedDerivation {
    pub fn new(g: &LieAlgebra, lambda: Vec<Scalar>, delta: Matrix) -> Result<Self> {
        match twisted_defect(g, &lambda, &delta)? {
            None => Ok(TwistedDerivation { lambda, delta }),
            Some(msg) => Err(Error::NotTwistedDerivation(msg)),
        }
    }

    /// Reads `(lambda, delta)` off a system with one-dimensional `V`:
    /// `lambda(a) e_u = e_u <- a` and `delta(a) = e_u -> a`.
    pub fn from_system(sys: &ExtendingSystem) -> Result<Self> {
        if sys.v_dim() != 1 {
            return Err(Error::DimensionMismatch("V must be one-dimensional".into()));
        }
        let n = sys.g_dim();
        let lambda = (0..n).map(|a| sys.left(0, a)[0].clone()).collect();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|a| sys.right(0, a).to_vec()).collect();
        let delta = Matrix::from_columns(sys.field(), n, &cols)?;
        TwistedDerivation::new(sys.g(), lambda, delta)
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.lambda
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    /// `lambda(v)`.
    pub fn lambda_of(&self, v: &[Scalar]) -> Scalar {
        v.iter()
            .zip(&self.lambda)
            .fold(self.delta.field().zero(), |acc, (a, b)| acc + a * b)
    }
}

/// The system on `V = k u` with `u <- g = lambda(g) u`, `u -> g = delta(g)`
/// and zero cocycle and quasi-bracket.
pub fn single_extension_system(g: &LieAlgebra, tw: &TwistedDerivation, name: &str) -> ExtendingSystem {
    let mut sys = ExtendingSystem::zero(g.clone(), 1)
        .with_v_names(vec![name.to_string()])
        .expect("one name");
    for a in 0..g.dim() {
        sys.set_left(0, a, vec![tw.lambda[a].clone()]).expect("shape");
        sys.set_right(0, a, tw.delta.column(a)).expect("shape");
    }
    sys
}

/// `g_(lambda, delta)`: `g + k u` with `[u, g] = delta(g) + lambda(g) u`.
pub fn single_extension(g: &LieAlgebra, tw: &TwistedDerivation, name: &str) -> Result<LieAlgebra> {
    unified_product(&single_extension_system(g, tw, name))
}
