//! Machine-word arithmetic mod `p` for the enumeration kernels.

use crate::lie::LieAlgebra;
use crate::linalg::Scalar;
use crate::products::ExtendingSystem;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u32,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `acc + a * b`.
    #[inline]
    pub fn mac(self, acc: u32, a: u32, b: u32) -> u32 {
        ((acc as u64 + a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        let (mut base, mut e, mut acc) = (a as u64, self.p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Determinant of a row-major `n x n` matrix.
    pub fn det(self, a: &[u32], n: usize) -> u32 {
        match n {
            0 => 1,
            1 => a[0],
            2 => self.sub(self.mul(a[0], a[3]), self.mul(a[1], a[2])),
            _ => {
                let mut m = a.to_vec();
                let mut det = 1;
                for c in 0..n {
                    let Some(piv) = (c..n).find(|&i| m[i * n + c] != 0) else {
                        return 0;
                    };
                    if piv != c {
                        for j in 0..n {
                            m.swap(piv * n + j, c * n + j);
                        }
                        det = self.sub(0, det);
                    }
                    det = self.mul(det, m[c * n + c]);
                    let inv = self.inv(m[c * n + c]);
                    for i in c + 1..n {
                        let f = self.mul(m[i * n + c], inv);
                        if f == 0 {
                            continue;
                        }
                        for j in c..n {
                            m[i * n + j] = self.sub(m[i * n + j], self.mul(f, m[c * n + j]));
                        }
                    }
                }
                det
            }
        }
    }

    /// Row-major product of an `r x k` and a `k x c` matrix.
    pub fn matmul(self, a: &[u32], b: &[u32], r: usize, k: usize, c: usize) -> Vec<u32> {
        let mut out = vec![0; r * c];
        for i in 0..r {
            for l in 0..k {
                let x = a[i * k + l];
                if x == 0 {
                    continue;
                }
                for j in 0..c {
                    out[i * c + j] = self.mac(out[i * c + j], x, b[l * c + j]);
                }
            }
        }
        out
    }
}

pub(crate) fn residue(s: &Scalar) -> u32 {
    s.residue().expect("prime field element")
}

/// Dense structure constants `c[(i*n + j)*n + k] = [e_i, e_j]_k`.
pub(crate) fn bracket_table(l: &LieAlgebra) -> Vec<u32> {
    let n = l.dim();
    let mut t = vec![0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in l.basis_bracket(i, j).iter().enumerate() {
                t[(i * n + j) * n + k] = residue(c);
            }
        }
    }
    t
}

/// Dense tables of an extending system.
pub(crate) struct SystemTables {
    pub n: usize,
    pub m: usize,
    /// `[(a*n + b)*n + c]`.
    pub br: Vec<u32>,
    /// `e_x <- e_a` at `[(x*n + a)*m + y]`.
    pub left: Vec<u32>,
    /// `e_x -> e_a` at `[(x*n + a)*n + b]`.
    pub right: Vec<u32>,
    /// `theta(e_x, e_y)` at `[(x*m + y)*n + b]`.
    pub theta: Vec<u32>,
    /// `{e_x, e_y}` at `[(x*m + y)*m + z]`.
    pub quasi: Vec<u32>,
}

impl SystemTables {
    pub fn new(sys: &ExtendingSystem) -> Self {
        let (n, m) = (sys.g_dim(), sys.v_dim());
        let mut left = vec![0; m * n * m];
        let mut right = vec![0; m * n * n];
        for x in 0..m {
            for a in 0..n {
                for (y, c) in sys.left(x, a).iter().enumerate() {
                    left[(x * n + a) * m + y] = residue(c);
                }
                for (b, c) in sys.right(x, a).iter().enumerate() {
                    right[(x * n + a) * n + b] = residue(c);
                }
            }
        }
        let mut theta = vec![0; m * m * n];
        let mut quasi = vec![0; m * m * m];
        for x in 0..m {
            for y in 0..m {
                for (b, c) in sys.theta(x, y).iter().enumerate() {
                    theta[(x * m + y) * n + b] = residue(c);
                }
                for (z, c) in sys.quasi(x, y).iter().enumerate() {
                    quasi[(x * m + y) * m + z] = residue(c);
                }
            }
        }
        SystemTables {
            n,
            m,
            br: bracket_table(sys.g()),
            left,
            right,
            theta,
            quasi,
        }
    }
}

/// Base-`p` odometer over `len` digits, least significant digit first.
pub(crate) struct Odometer {
    pub digits: Vec<u32>,
    p: u32,
}

impl Odometer {
    pub fn at(index: u64, len: usize, p: u32) -> Self {
        let mut digits = vec![0; len];
        let mut i = index;
        for d in digits.iter_mut() {
            *d = (i % p as u64) as u32;
            i /= p as u64;
        }
        Odometer { digits, p }
    }

    pub fn advance(&mut self) {
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.p {
                return;
            }
            *d = 0;
        }
    }
}
