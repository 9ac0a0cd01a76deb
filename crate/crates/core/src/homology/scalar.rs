//! Coefficient rings used by the elimination kernels.
//!
//! Every operation returns `Option` so that the machine-integer ring can
//! report overflow; callers rerun on [`BigInts`] when that happens.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Scalars: Sync + Send {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_bigint(&self, v: &BigInt) -> Option<Self::Elem>;
    fn to_bigint(&self, a: &Self::Elem) -> BigInt;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn neg(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Euclidean division with a remainder of strictly smaller norm than `b`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// Compares elements by Euclidean norm (absolute value over ℤ).
    fn cmp_norm(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Returns a unit `u` such that `u * a` is the canonical associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;

    /// `a - c * b`, the inner step of every elimination.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.sub(a, &self.mul(c, b)?)
    }
}

/// ℤ in checked `i64` arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallInts;

impl Scalars for SmallInts {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn from_bigint(&self, v: &BigInt) -> Option<i64> {
        v.to_i64()
    }
    fn to_bigint(&self, a: &i64) -> BigInt {
        BigInt::from(*a)
    }
    fn add(&self, a: &i64, b: &i64) -> Option<i64> {
        a.checked_add(*b)
    }
    fn sub(&self, a: &i64, b: &i64) -> Option<i64> {
        a.checked_sub(*b)
    }
    fn mul(&self, a: &i64, b: &i64) -> Option<i64> {
        a.checked_mul(*b)
    }
    fn neg(&self, a: &i64) -> Option<i64> {
        a.checked_neg()
    }
    fn div_rem(&self, a: &i64, b: &i64) -> Option<(i64, i64)> {
        Some((a.checked_div(*b)?, a.checked_rem(*b)?))
    }
    fn cmp_norm(&self, a: &i64, b: &i64) -> Ordering {
        a.unsigned_abs().cmp(&b.unsigned_abs())
    }
    fn is_unit(&self, a: &i64) -> bool {
        *a == 1 || *a == -1
    }
    fn normalizing_unit(&self, a: &i64) -> i64 {
        if *a < 0 {
            -1
        } else {
            1
        }
    }
    fn unit_inverse(&self, u: &i64) -> i64 {
        *u
    }
}

/// ℤ with arbitrary precision.
#[derive(Debug, Clone, Copy, Default)]
pub struct BigInts;

impl Scalars for BigInts {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn from_bigint(&self, v: &BigInt) -> Option<BigInt> {
        Some(v.clone())
    }
    fn to_bigint(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a + b)
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a - b)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn neg(&self, a: &BigInt) -> Option<BigInt> {
        Some(-a)
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
        Some(a.div_rem(b))
    }
    fn cmp_norm(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
}

/// The prime field ℤ/p.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> PrimeField {
        assert!(p >= 2, "modulus must be at least 2");
        PrimeField { p: u64::from(p) }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn reduce(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().unwrap_or(0)
    }
}

impl Scalars for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_bigint(&self, v: &BigInt) -> Option<u64> {
        Some(self.reduce(v))
    }
    fn to_bigint(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
    fn add(&self, a: &u64, b: &u64) -> Option<u64> {
        Some((a + b) % self.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> Option<u64> {
        Some((a + self.p - b) % self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(a * b % self.p)
    }
    fn neg(&self, a: &u64) -> Option<u64> {
        Some((self.p - a) % self.p)
    }
    fn div_rem(&self, a: &u64, b: &u64) -> Option<(u64, u64)> {
        Some((a * self.unit_inverse(b) % self.p, 0))
    }
    fn cmp_norm(&self, a: &u64, b: &u64) -> Ordering {
        (*a != 0).cmp(&(*b != 0))
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.unit_inverse(a)
        }
    }
    fn unit_inverse(&self, u: &u64) -> u64 {
        // Fermat; p is assumed prime.
        self.pow(*u, self.p - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ints_report_overflow() {
        let r = SmallInts;
        assert_eq!(r.mul(&i64::MAX, &2), None);
        assert_eq!(r.div_rem(&7, &-2), Some((-3, 1)));
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7);
        for a in 1..7u64 {
            assert_eq!(f.mul(&a, &f.unit_inverse(&a)), Some(1));
        }
        assert_eq!(f.reduce(&BigInt::from(-3)), 4);
    }
}
