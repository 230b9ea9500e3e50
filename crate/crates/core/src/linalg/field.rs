//! Base fields and their elements.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Either the rationals or a prime field `F_p` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    modulus: Option<u32>,
}

impl Field {
    pub fn rationals() -> Self {
        Field { modulus: None }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field {
            modulus: Some(p as u32),
        })
    }

    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        self.modulus.unwrap_or(0)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.modulus {
            None => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Some(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let d = self
            .from_i64(den)
            .inv()
            .ok_or_else(|| Error::InvalidParameter(format!("{den} is not invertible in {self}")))?;
        Ok(self.from_i64(num) * d)
    }

    /// Residue of a big integer in this field.
    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.modulus {
            None => Scalar::Rational(BigRational::from_integer(v.clone())),
            Some(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// Parses `a`, `-a` or `a/b`. Over `F_p` integers are reduced mod `p`
    /// and fractions need an invertible denominator.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("malformed scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self.modulus {
            None => Ok(Scalar::Rational(BigRational::new(num, den))),
            Some(_) => self
                .from_bigint(&den)
                .inv()
                .map(|d| self.from_bigint(&num) * d)
                .ok_or_else(|| Error::InvalidParameter(format!("{s}: denominator not invertible in {self}"))),
        }
    }

    /// All elements in increasing residue order, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus
            .map(|p| (0..p as i64).map(|v| self.from_i64(v)).collect())
    }

    pub(crate) fn check(&self, other: &Field) -> Result<()> {
        if self != other {
            return Err(Error::FieldMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::rationals());
        }
        let p = s
            .strip_prefix('F')
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown field {s:?} (expected Q or F<p>)")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator, residues in `[0, p)`.
///
/// Mixing elements of different fields in arithmetic panics; the containers
/// in this crate check fields before combining values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::rationals(),
            Scalar::Residue { modulus, .. } => Field {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Residue value, for prime field elements.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
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

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2).
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn same_modulus(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "arithmetic between different prime fields");
    a
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => panic!("arithmetic between different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => panic!("arithmetic between different fields"),
        }
    }
}

/// Panics on division by zero.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// True when a rational is in lowest terms with positive denominator.
pub fn is_reduced(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r.denom().is_positive() && r.numer().gcd(r.denom()).is_one(),
        Scalar::Residue { value, modulus } => value < modulus,
    }
}
