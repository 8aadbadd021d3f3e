use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// A Euclidean domain given by a context value, so that residue rings can
/// carry their modulus outside the element type.
pub trait EuclideanDomain {
    type Elem: Clone + PartialEq + fmt::Debug;
    type Size: Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Euclidean size; strictly decreases along `div_rem` remainders.
    fn size(&self, a: &Self::Elem) -> Self::Size;
    /// `(q, r)` with `a = q*b + r` and `r` zero or smaller than `b`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Canonical associate (positive integer, or `1` in a field).
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !self.is_zero(&b) {
            let (_, r) = self.div_rem(&a, &b);
            a = b;
            b = r;
        }
        self.normalize(&a)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = BigInt;
    type Size = BigUint;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn size(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_rem(b)
    }
    fn normalize(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl EuclideanDomain for Rationals {
    type Elem = BigRational;
    type Size = u8;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn size(&self, a: &BigRational) -> u8 {
        u8::from(!a.is_zero())
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn normalize(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            BigRational::zero()
        } else {
            BigRational::one()
        }
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
}

/// The prime field ℤ/p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    p: u64,
}

impl IntegersMod {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(IntegersMod { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    fn inverse(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

impl EuclideanDomain for IntegersMod {
    type Elem = u64;
    type Size = u8;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn size(&self, a: &u64) -> u8 {
        u8::from(*a != 0)
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul(a, &self.inverse(*b)), 0)
    }
    fn normalize(&self, a: &u64) -> u64 {
        u64::from(*a != 0)
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient rings supported by the homology and equivalence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl Ring {
    /// ℤ/p, rejecting composite `p`.
    pub fn integers_mod(p: u64) -> Result<Ring> {
        IntegersMod::new(p).map(|_| Ring::IntegersMod(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::IntegersMod(p) => write!(f, "Z/{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        match s.trim() {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            other => {
                let p = other
                    .strip_prefix("Z/")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::UnknownRing(other.to_string()))?;
                Ring::integers_mod(p)
            }
        }
    }
}
