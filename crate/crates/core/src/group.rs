//! Finite groups given extensionally, through their Cayley table.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::error::{Error, Result};

/// Multiplication table of a finite group on elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Order and structural flags of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAnalysis {
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub elementary_abelian: bool,
    pub metabelian: bool,
    pub solvable: bool,
    /// Orders of `G, G', G'', ...` until the series stabilizes.
    pub derived_orders: Vec<usize>,
    pub exponent: usize,
}

impl CayleyTable {
    /// Tabulates `mul` on `elements`. Fails if the set is not closed, has no
    /// identity or lacks inverses.
    pub fn from_elements<T: Eq + Hash + Clone>(elements: &[T], mul: impl Fn(&T, &T) -> T) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty group".into()));
        }
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != n {
            return Err(Error::InvalidParameter("repeated group element".into()));
        }
        let mut table = vec![0; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = mul(a, b);
                table[i * n + j] = *index
                    .get(&c)
                    .ok_or_else(|| Error::InvalidParameter("element set is not closed under multiplication".into()))?;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| Error::InvalidParameter("no identity element".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a * n + b] == identity)
                    .ok_or_else(|| Error::InvalidParameter("missing inverse".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CayleyTable {
            n,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = HashSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<usize> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Subgroup generated by all commutators `a^-1 b^-1 a b` of elements of
    /// the subgroup `h`.
    pub fn derived_subgroup(&self, h: &[usize]) -> Vec<usize> {
        let mut comms = HashSet::new();
        for &a in h {
            for &b in h {
                let c = self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b));
                comms.insert(c);
            }
        }
        let mut gens: Vec<usize> = comms.into_iter().collect();
        gens.sort_unstable();
        self.generated(&gens)
    }

    /// Subgroups `G, G', G'', ...` up to the first repeat.
    pub fn derived_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.n).collect::<Vec<_>>()];
        loop {
            let next = self.derived_subgroup(series.last().expect("nonempty"));
            if next.len() == series.last().expect("nonempty").len() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn analysis(&self) -> GroupAnalysis {
        let orders: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        let exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        let abelian = self.is_abelian();
        let cyclic = orders.contains(&self.n);
        let elementary_abelian = abelian && (exponent == 1 || is_prime(exponent));
        let series = self.derived_series();
        let derived_orders: Vec<usize> = series.iter().map(Vec::len).collect();
        let solvable = derived_orders.last() == Some(&1);
        let metabelian = derived_orders.get(2).map_or(solvable, |&o| o == 1);
        GroupAnalysis {
            order: self.n,
            abelian,
            cyclic,
            elementary_abelian,
            metabelian,
            solvable,
            derived_orders,
            exponent,
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
