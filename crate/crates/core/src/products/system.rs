use std::fmt;

use crate::error::{Error, Result};
use crate::lie::algebra::{add_into, pair_index, BracketEntry};
use crate::lie::LieAlgebra;
use crate::linalg::{is_zero_vector, unit, Field, Matrix, Scalar};

/// The four structure maps `(left, right, theta, quasi)` of `g` through a
/// vector space `V` of dimension `m`:
///
/// * `x <- a` (left action) `V x g -> V`
/// * `x -> a` (right action) `V x g -> g`
/// * `theta(x, y)` (cocycle) `V x V -> g`
/// * `{x, y}` (quasi-bracket) `V x V -> V`
///
/// `theta` and `{-,-}` are stored for `x < y` only and are antisymmetric by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendingSystem {
    g: LieAlgebra,
    v_names: Vec<String>,
    left: Vec<Vec<Scalar>>,
    right: Vec<Vec<Scalar>>,
    theta: Vec<Vec<Scalar>>,
    quasi: Vec<Vec<Scalar>>,
}

/// Which structure maps vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// No map is known to vanish.
    General,
    /// The right action vanishes.
    Skew,
    /// The left action vanishes.
    Crossed,
    /// The cocycle vanishes.
    MatchedPair,
    /// The cocycle and at least one action vanish.
    Semidirect,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SystemKind::General => "general",
            SystemKind::Skew => "skew",
            SystemKind::Crossed => "crossed",
            SystemKind::MatchedPair => "matched pair",
            SystemKind::Semidirect => "semidirect",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self:?})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// Lexicographically first failing basis tuple.
    pub violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.violation.is_none())
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.violation.is_some())
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.checks
            .iter()
            .filter(|c| c.violation.is_some())
            .map(|c| c.axiom)
            .collect()
    }

    fn into_result(self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::AxiomViolation {
                axiom: c.axiom.to_string(),
                tuple: c.violation.clone().unwrap_or_default(),
            }),
        }
    }
}

impl ExtendingSystem {
    /// All four maps zero; `V` gets basis names `v1, ..., vm`.
    pub fn zero(g: LieAlgebra, m: usize) -> Self {
        let n = g.dim();
        let field = g.field();
        ExtendingSystem {
            v_names: (1..=m).map(|i| format!("v{i}")).collect(),
            left: vec![vec![field.zero(); m]; m * n],
            right: vec![vec![field.zero(); n]; m * n],
            theta: vec![vec![field.zero(); n]; m * m.saturating_sub(1) / 2],
            quasi: vec![vec![field.zero(); m]; m * m.saturating_sub(1) / 2],
            g,
        }
    }

    pub fn with_v_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.v_dim() {
            return Err(Error::DimensionMismatch("name count differs from dim V".into()));
        }
        self.v_names = names;
        Ok(self)
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn field(&self) -> Field {
        self.g.field()
    }

    pub fn g_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn v_dim(&self) -> usize {
        self.v_names.len()
    }

    pub fn v_names(&self) -> &[String] {
        &self.v_names
    }

    fn check_len(&self, v: &[Scalar], len: usize) -> Result<()> {
        if v.len() != len {
            return Err(Error::DimensionMismatch(format!("expected {len} coefficients, got {}", v.len())));
        }
        for s in v {
            self.field().check(&s.field())?;
        }
        Ok(())
    }

    fn check_va(&self, x: usize, a: usize) -> Result<()> {
        if x >= self.v_dim() || a >= self.g_dim() {
            return Err(Error::BadIndex(format!("({x}, {a})")));
        }
        Ok(())
    }

    fn check_vv(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.v_dim() || y >= self.v_dim() || x == y {
            return Err(Error::BadIndex(format!("({x}, {y})")));
        }
        Ok(())
    }

    pub fn set_left(&mut self, x: usize, a: usize, value: Vec<Scalar>) -> Result<()> {
        self.check_va(x, a)?;
        self.check_len(&value, self.v_dim())?;
        let n = self.g_dim();
        self.left[x * n + a] = value;
        Ok(())
    }

    pub fn set_right(&mut self, x: usize, a: usize, value: Vec<Scalar>) -> Result<()> {
        self.check_va(x, a)?;
        self.check_len(&value, self.g_dim())?;
        let n = self.g_dim();
        self.right[x * n + a] = value;
        Ok(())
    }

    /// Sets `theta(x, y)`; `x > y` stores `theta(y, x) = -value`.
    pub fn set_theta(&mut self, x: usize, y: usize, value: Vec<Scalar>) -> Result<()> {
        self.check_vv(x, y)?;
        self.check_len(&value, self.g_dim())?;
        let (k, v) = self.oriented(x, y, value);
        self.theta[k] = v;
        Ok(())
    }

    /// Sets `{x, y}`; `x > y` stores `{y, x} = -value`.
    pub fn set_quasi(&mut self, x: usize, y: usize, value: Vec<Scalar>) -> Result<()> {
        self.check_vv(x, y)?;
        self.check_len(&value, self.v_dim())?;
        let (k, v) = self.oriented(x, y, value);
        self.quasi[k] = v;
        Ok(())
    }

    fn oriented(&self, x: usize, y: usize, value: Vec<Scalar>) -> (usize, Vec<Scalar>) {
        let m = self.v_dim();
        if x < y {
            (pair_index(m, x, y), value)
        } else {
            (pair_index(m, y, x), value.iter().map(|c| -c).collect())
        }
    }

    /// `e_x <- e_a`.
    pub fn left(&self, x: usize, a: usize) -> &[Scalar] {
        &self.left[x * self.g_dim() + a]
    }

    /// `e_x -> e_a`.
    pub fn right(&self, x: usize, a: usize) -> &[Scalar] {
        &self.right[x * self.g_dim() + a]
    }

    pub fn theta(&self, x: usize, y: usize) -> Vec<Scalar> {
        self.antisym(&self.theta, x, y, self.g_dim())
    }

    pub fn quasi(&self, x: usize, y: usize) -> Vec<Scalar> {
        self.antisym(&self.quasi, x, y, self.v_dim())
    }

    fn antisym(&self, store: &[Vec<Scalar>], x: usize, y: usize, len: usize) -> Vec<Scalar> {
        let m = self.v_dim();
        match x.cmp(&y) {
            std::cmp::Ordering::Less => store[pair_index(m, x, y)].clone(),
            std::cmp::Ordering::Greater => store[pair_index(m, y, x)].iter().map(|c| -c).collect(),
            std::cmp::Ordering::Equal => vec![self.field().zero(); len],
        }
    }

    /// Matrix of `x |-> x <- e_a` on `V`.
    pub fn left_matrix(&self, a: usize) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.v_dim()).map(|x| self.left(x, a).to_vec()).collect();
        Matrix::from_columns(self.field(), self.v_dim(), &cols).expect("columns of length m")
    }

    /// Matrix of `x |-> x -> e_a`, a map `V -> g`.
    pub fn right_matrix(&self, a: usize) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.v_dim()).map(|x| self.right(x, a).to_vec()).collect();
        Matrix::from_columns(self.field(), self.g_dim(), &cols).expect("columns of length n")
    }

    pub fn left_is_zero(&self) -> bool {
        self.left.iter().all(|v| is_zero_vector(v))
    }

    pub fn right_is_zero(&self) -> bool {
        self.right.iter().all(|v| is_zero_vector(v))
    }

    pub fn theta_is_zero(&self) -> bool {
        self.theta.iter().all(|v| is_zero_vector(v))
    }

    pub fn quasi_is_zero(&self) -> bool {
        self.quasi.iter().all(|v| is_zero_vector(v))
    }

    // Bilinear extensions to coordinate vectors.

    pub(crate) fn left_v(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.v_dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, aj) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * aj), self.left(i, j));
            }
        }
        out
    }

    pub(crate) fn right_v(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.g_dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, aj) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * aj), self.right(i, j));
            }
        }
        out
    }

    pub(crate) fn theta_v(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.pair_v(&self.theta, x, y, self.g_dim())
    }

    pub(crate) fn quasi_v(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.pair_v(&self.quasi, x, y, self.v_dim())
    }

    fn pair_v(&self, store: &[Vec<Scalar>], x: &[Scalar], y: &[Scalar], len: usize) -> Vec<Scalar> {
        let m = self.v_dim();
        let mut out = vec![self.field().zero(); len];
        for i in 0..m {
            for j in i + 1..m {
                let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                if !c.is_zero() {
                    axpy(&mut out, &c, &store[pair_index(m, i, j)]);
                }
            }
        }
        out
    }

    fn ev(&self, x: usize) -> Vec<Scalar> {
        unit(self.field(), self.v_dim(), x)
    }

    fn eg(&self, a: usize) -> Vec<Scalar> {
        unit(self.field(), self.g_dim(), a)
    }

    fn name_v(&self, x: usize) -> &str {
        &self.v_names[x]
    }

    fn name_g(&self, a: usize) -> &str {
        &self.g.names()[a]
    }

    /// Classification by which maps vanish, most specific first.
    pub fn classify(&self) -> SystemKind {
        let (l, r, t) = (self.left_is_zero(), self.right_is_zero(), self.theta_is_zero());
        if t && (l || r) {
            SystemKind::Semidirect
        } else if r {
            SystemKind::Skew
        } else if l {
            SystemKind::Crossed
        } else if t {
            SystemKind::MatchedPair
        } else {
            SystemKind::General
        }
    }

    /// True when the right action vanishes, i.e. the product is a skew
    /// crossed product.
    pub fn is_skew(&self) -> bool {
        self.right_is_zero()
    }

    /// Evaluates (L1)-(L6) on basis tuples. Antisymmetry of `theta` and
    /// `{-,-}` holds by construction; by (multi)linearity the basis tuples
    /// with sorted antisymmetric arguments suffice.
    pub fn check_extending_axioms(&self) -> AxiomReport {
        AxiomReport {
            checks: vec![
                self.check(Axiom::L1, Self::module_defect),
                self.check(Axiom::L2, Self::l2_defect),
                self.check(Axiom::L3, Self::l3_defect),
                self.check(Axiom::L4, Self::l4_defect),
                self.check(Axiom::L5, Self::l5_defect),
                self.check(Axiom::L6, Self::l6_defect),
            ],
        }
    }

    /// Evaluates (T1)-(T5). Errors if the right action is nonzero.
    pub fn check_skew_axioms(&self) -> Result<AxiomReport> {
        if !self.right_is_zero() {
            return Err(Error::InvalidParameter(
                "skew axioms apply only when the right action vanishes".into(),
            ));
        }
        Ok(AxiomReport {
            checks: vec![
                self.check(Axiom::T1, Self::module_defect),
                self.check(Axiom::T2, Self::t2_defect),
                self.check(Axiom::T3, Self::t3_defect),
                self.check(Axiom::T4, Self::t4_defect),
                self.check(Axiom::T5, Self::l6_defect),
            ],
        })
    }

    fn check(&self, axiom: Axiom, f: fn(&Self) -> Option<String>) -> AxiomCheck {
        AxiomCheck {
            axiom,
            violation: f(self),
        }
    }

    /// Scans `(x, a, b)` with `a < b`.
    fn scan_x_ab(&self, f: impl Fn(&[Scalar], usize, usize) -> Vec<Scalar>) -> Option<String> {
        let n = self.g_dim();
        for x in 0..self.v_dim() {
            let ex = self.ev(x);
            for a in 0..n {
                for b in a + 1..n {
                    if !is_zero_vector(&f(&ex, a, b)) {
                        return Some(format!("(x={}, a={}, b={})", self.name_v(x), self.name_g(a), self.name_g(b)));
                    }
                }
            }
        }
        None
    }

    /// Scans `(x, y, a)` with `x < y`.
    fn scan_xy_a(&self, f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vec<Scalar>) -> Option<String> {
        let m = self.v_dim();
        for x in 0..m {
            for y in x + 1..m {
                for a in 0..self.g_dim() {
                    if !is_zero_vector(&f(&self.ev(x), &self.ev(y), &self.eg(a))) {
                        return Some(format!("(x={}, y={}, a={})", self.name_v(x), self.name_v(y), self.name_g(a)));
                    }
                }
            }
        }
        None
    }

    /// Scans `x < y < z` on the sum of the three rotations of `f`.
    fn scan_circular(&self, f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vec<Scalar>) -> Option<String> {
        let m = self.v_dim();
        for x in 0..m {
            for y in x + 1..m {
                for z in y + 1..m {
                    let (ex, ey, ez) = (self.ev(x), self.ev(y), self.ev(z));
                    let mut acc = f(&ex, &ey, &ez);
                    add_into(&mut acc, &f(&ey, &ez, &ex));
                    add_into(&mut acc, &f(&ez, &ex, &ey));
                    if !is_zero_vector(&acc) {
                        return Some(format!("(x={}, y={}, z={})", self.name_v(x), self.name_v(y), self.name_v(z)));
                    }
                }
            }
        }
        None
    }

    /// `x <- [a,b] - (x <- a) <- b + (x <- b) <- a`.
    fn module_defect(&self) -> Option<String> {
        self.scan_x_ab(|x, a, b| {
            let (ea, eb) = (self.eg(a), self.eg(b));
            let mut d = self.left_v(x, &self.g.basis_bracket(a, b));
            sub_into(&mut d, &self.left_v(&self.left_v(x, &ea), &eb));
            add_into(&mut d, &self.left_v(&self.left_v(x, &eb), &ea));
            d
        })
    }

    fn l2_defect(&self) -> Option<String> {
        self.scan_x_ab(|x, a, b| {
            let (ea, eb) = (self.eg(a), self.eg(b));
            let mut d = self.right_v(x, &self.g.basis_bracket(a, b));
            sub_into(&mut d, &self.g.br(&self.right_v(x, &ea), &eb));
            sub_into(&mut d, &self.g.br(&ea, &self.right_v(x, &eb)));
            sub_into(&mut d, &self.right_v(&self.left_v(x, &ea), &eb));
            add_into(&mut d, &self.right_v(&self.left_v(x, &eb), &ea));
            d
        })
    }

    fn l3_defect(&self) -> Option<String> {
        self.scan_xy_a(|x, y, a| {
            let mut d = self.t2_expr(x, y, a);
            sub_into(&mut d, &self.left_v(x, &self.right_v(y, a)));
            add_into(&mut d, &self.left_v(y, &self.right_v(x, a)));
            d
        })
    }

    fn l4_defect(&self) -> Option<String> {
        self.scan_xy_a(|x, y, a| {
            let mut d = self.right_v(&self.quasi_v(x, y), a);
            sub_into(&mut d, &self.right_v(x, &self.right_v(y, a)));
            add_into(&mut d, &self.right_v(y, &self.right_v(x, a)));
            sub_into(&mut d, &self.g.br(a, &self.theta_v(x, y)));
            sub_into(&mut d, &self.theta_v(x, &self.left_v(y, a)));
            sub_into(&mut d, &self.theta_v(&self.left_v(x, a), y));
            d
        })
    }

    fn l5_defect(&self) -> Option<String> {
        self.scan_circular(|x, y, z| {
            let mut d = self.theta_v(x, &self.quasi_v(y, z));
            add_into(&mut d, &self.right_v(x, &self.theta_v(y, z)));
            d
        })
    }

    fn l6_defect(&self) -> Option<String> {
        self.scan_circular(|x, y, z| {
            let mut d = self.quasi_v(x, &self.quasi_v(y, z));
            add_into(&mut d, &self.left_v(x, &self.theta_v(y, z)));
            d
        })
    }

    /// `{x,y} <- a - {x, y <- a} - {x <- a, y}`.
    fn t2_expr(&self, x: &[Scalar], y: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut d = self.left_v(&self.quasi_v(x, y), a);
        sub_into(&mut d, &self.quasi_v(x, &self.left_v(y, a)));
        sub_into(&mut d, &self.quasi_v(&self.left_v(x, a), y));
        d
    }

    fn t2_defect(&self) -> Option<String> {
        self.scan_xy_a(|x, y, a| self.t2_expr(x, y, a))
    }

    fn t3_defect(&self) -> Option<String> {
        self.scan_xy_a(|x, y, a| {
            let mut d = self.g.br(&self.theta_v(x, y), a);
            sub_into(&mut d, &self.theta_v(x, &self.left_v(y, a)));
            sub_into(&mut d, &self.theta_v(&self.left_v(x, a), y));
            d
        })
    }

    fn t4_defect(&self) -> Option<String> {
        self.scan_circular(|x, y, z| self.theta_v(x, &self.quasi_v(y, z)))
    }

    /// Basis names of `g x V`: the names of `g` followed by those of `V`.
    pub fn product_names(&self) -> Vec<String> {
        let mut names = self.g.names().to_vec();
        names.extend(self.v_names.iter().cloned());
        names
    }

    /// Structure constants of the bracket
    /// `[(a,x),(b,y)] = ([a,b] + x->b - y->a + theta(x,y), {x,y} + x<-b - y<-a)`
    /// on `g x V`, basis of `g` first.
    pub fn product_table(&self) -> Vec<BracketEntry> {
        let (n, m) = (self.g_dim(), self.v_dim());
        let field = self.field();
        let mut entries: Vec<BracketEntry> = Vec::new();
        for (i, j, v) in self.g.entries() {
            let mut w = v;
            w.resize(n + m, field.zero());
            entries.push((i, j, w));
        }
        for a in 0..n {
            for y in 0..m {
                // [(a,0),(0,y)] = (-(y -> a), -(y <- a)).
                let w: Vec<Scalar> = self.right(y, a).iter().chain(self.left(y, a)).map(|c| -c).collect();
                if !is_zero_vector(&w) {
                    entries.push((a, n + y, w));
                }
            }
        }
        for x in 0..m {
            for y in x + 1..m {
                let mut w = self.theta(x, y);
                w.extend(self.quasi(x, y));
                if !is_zero_vector(&w) {
                    entries.push((n + x, n + y, w));
                }
            }
        }
        entries
    }

    /// Builds `g x V` with the unified bracket without checking the axioms
    /// first. Construction still fails if the result violates Jacobi.
    pub fn try_product_algebra(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.field(), self.product_names(), self.product_table())
    }
}

fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += &(c * x);
        }
    }
}

fn sub_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a -= b;
        }
    }
}

/// The unified product of `g` and `sys`. Refuses to build when an extending
/// axiom fails, naming the axiom and tuple.
pub fn unified_product(sys: &ExtendingSystem) -> Result<LieAlgebra> {
    sys.check_extending_axioms().into_result()?;
    sys.try_product_algebra()
}

/// The skew crossed product; requires a vanishing right action and (T1)-(T5).
pub fn skew_crossed_product(sys: &ExtendingSystem) -> Result<LieAlgebra> {
    sys.check_skew_axioms()?.into_result()?;
    sys.try_product_algebra()
}

/// Semidirect product `g x V` in the right-side convention: `V` is a Lie
/// algebra, `action[a]` is the matrix of `x |-> x <- e_a` on `V`, and
/// `{0} x V` is an ideal.
pub fn semidirect_product(g: &LieAlgebra, v: &LieAlgebra, action: &[Matrix]) -> Result<LieAlgebra> {
    semidirect_system(g, v, action).and_then(|s| skew_crossed_product(&s))
}

/// The extending system behind [`semidirect_product`].
pub fn semidirect_system(g: &LieAlgebra, v: &LieAlgebra, action: &[Matrix]) -> Result<ExtendingSystem> {
    g.field().check(&v.field())?;
    let m = v.dim();
    if action.len() != g.dim() || action.iter().any(|a| a.rows() != m || a.cols() != m) {
        return Err(Error::DimensionMismatch(format!(
            "expected {} action matrices of size {m}x{m}",
            g.dim()
        )));
    }
    let mut sys = ExtendingSystem::zero(g.clone(), m).with_v_names(v.names().to_vec())?;
    for (a, mat) in action.iter().enumerate() {
        for x in 0..m {
            sys.set_left(x, a, mat.column(x))?;
        }
    }
    for (x, y, w) in v.entries() {
        sys.set_quasi(x, y, w)?;
    }
    Ok(sys)
}
