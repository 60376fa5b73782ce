//! Exact arithmetic in the ring of integers of Q(sqrt 5).
//!
//! Elements are stored as `(u + v*sqrt(5)) / 2` with `u ≡ v (mod 2)`. This
//! keeps the golden ratio, its conjugate and `sqrt(5)` itself first-class,
//! and makes division by `sqrt(5)` an exact, checkable operation.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::RingError;

/// An element `(u + v*sqrt(5)) / 2` of the ring of integers of Q(sqrt 5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenInt {
    u: BigInt,
    v: BigInt,
}

impl GoldenInt {
    /// Builds `(u + v*sqrt(5)) / 2`, rejecting pairs of mixed parity.
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self, RingError> {
        let (u, v) = (u.into(), v.into());
        if u.is_even() != v.is_even() {
            return Err(RingError::Parity { u, v });
        }
        Ok(GoldenInt { u, v })
    }

    // Caller guarantees parity.
    fn raw(u: BigInt, v: BigInt) -> Self {
        debug_assert_eq!(u.is_even(), v.is_even());
        GoldenInt { u, v }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        GoldenInt::raw(n.into() * 2u32, BigInt::zero())
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn phi() -> Self {
        GoldenInt::raw(BigInt::one(), BigInt::one())
    }

    /// The conjugate of the golden ratio, `(1 - sqrt 5) / 2 = -1/phi`.
    pub fn psi() -> Self {
        GoldenInt::raw(BigInt::one(), -BigInt::one())
    }

    pub fn sqrt5() -> Self {
        GoldenInt::raw(BigInt::zero(), BigInt::from(2))
    }

    /// Twice the rational part.
    pub fn u(&self) -> &BigInt {
        &self.u
    }

    /// Twice the coefficient of `sqrt(5)`.
    pub fn v(&self) -> &BigInt {
        &self.v
    }

    /// Maps `(u + v√5)/2` to `(u - v√5)/2`.
    pub fn conjugate(&self) -> Self {
        GoldenInt::raw(self.u.clone(), -&self.v)
    }

    /// `a * conjugate(a)`, always a rational integer.
    pub fn norm(&self) -> BigInt {
        (&self.u * &self.u - BigInt::from(5) * &self.v * &self.v) / 4
    }

    /// Exact `k`-th power by square-and-multiply; `pow(0)` is one.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenInt::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `b` with `sqrt(5) * b == self`.
    pub fn div_sqrt5(&self) -> Result<Self, RingError> {
        // sqrt5 * (p + q√5)/2 = (5q + p√5)/2, so p = v and q = u/5.
        let (q, r) = self.u.div_rem(&BigInt::from(5));
        if !r.is_zero() {
            return Err(RingError::NotDivisible(self.clone()));
        }
        Ok(GoldenInt::raw(self.v.clone(), q))
    }

    pub fn is_divisible_by_sqrt5(&self) -> bool {
        (&self.u % BigInt::from(5)).is_zero()
    }

    pub fn to_integer(&self) -> Result<BigInt, RingError> {
        if !self.v.is_zero() {
            return Err(RingError::NotRational(self.clone()));
        }
        assert!(self.u.is_even(), "parity invariant violated: {self:?}");
        Ok(&self.u / 2)
    }

    pub fn is_integer(&self) -> bool {
        self.v.is_zero()
    }

    /// Multiplicative inverse when the element is a unit (norm ±1).
    pub fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.abs().is_one() {
            Some(&self.conjugate() * &GoldenInt::from_integer(n))
        } else {
            None
        }
    }

    /// `phi^e` for any signed exponent, using `phi^-1 = -psi`.
    pub fn phi_pow(e: i64) -> Self {
        signed_power(&GoldenInt::phi(), &GoldenInt::psi(), e)
    }

    /// `psi^e` for any signed exponent, using `psi^-1 = -phi`.
    pub fn psi_pow(e: i64) -> Self {
        signed_power(&GoldenInt::psi(), &GoldenInt::phi(), e)
    }
}

// base^e, with base^-1 = -partner (valid because phi * psi = -1).
fn signed_power(base: &GoldenInt, partner: &GoldenInt, e: i64) -> GoldenInt {
    if e >= 0 {
        base.pow(e as u64)
    } else {
        (-partner).pow(e.unsigned_abs())
    }
}

impl fmt::Debug for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenInt(u={}, v={})", self.u, self.v)
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", &self.u / 2);
        }
        let sign = if self.v.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt(5))/2", self.u, sign, self.v.abs())
    }
}

impl<'a> Add<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt::raw(&self.u + &rhs.u, &self.v + &rhs.v)
    }
}

impl<'a> Sub<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt::raw(&self.u - &rhs.u, &self.v - &rhs.v)
    }
}

impl<'a> Mul<&'a GoldenInt> for &'a GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        // ((u1 + v1√5)(u2 + v2√5))/4, halved back into (u + v√5)/2 form.
        let u = (&self.u * &rhs.u + BigInt::from(5) * &self.v * &rhs.v) >> 1;
        let v = (&self.u * &rhs.v + &self.v * &rhs.u) >> 1;
        GoldenInt::raw(u, v)
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::raw(-&self.u, -&self.v)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, rhs: GoldenInt) -> GoldenInt {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $m(self, rhs: &GoldenInt) -> GoldenInt {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::raw(-self.u, -self.v)
    }
}

impl Zero for GoldenInt {
    fn zero() -> Self {
        GoldenInt::raw(BigInt::zero(), BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for GoldenInt {
    fn one() -> Self {
        GoldenInt::raw(BigInt::from(2), BigInt::zero())
    }
}

impl From<BigInt> for GoldenInt {
    fn from(n: BigInt) -> Self {
        GoldenInt::from_integer(n)
    }
}

impl From<i64> for GoldenInt {
    fn from(n: i64) -> Self {
        GoldenInt::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(u: i64, v: i64) -> GoldenInt {
        GoldenInt::new(u, v).unwrap()
    }

    #[test]
    fn products_of_phi_and_psi() {
        assert_eq!(GoldenInt::phi() * GoldenInt::phi(), g(3, 1));
        assert_eq!(GoldenInt::phi() * GoldenInt::psi(), g(-2, 0));
        let z = g(7, -3);
        assert_eq!(GoldenInt::one() * z.clone(), z);
    }

    #[test]
    fn powers() {
        assert_eq!(GoldenInt::phi().pow(0), g(2, 0));
        assert_eq!(GoldenInt::phi().pow(4), g(7, 3));
        assert_eq!(GoldenInt::psi().pow(2), g(3, -1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(GoldenInt::phi().conjugate(), GoldenInt::psi());
        assert_eq!(g(3, 1).conjugate(), g(3, -1));
        let z = g(-11, 5);
        assert_eq!(z.conjugate().conjugate(), z);
    }

    #[test]
    fn division_by_sqrt5() {
        let d = GoldenInt::phi() - GoldenInt::psi();
        assert_eq!(d.div_sqrt5().unwrap(), GoldenInt::one());
        let d10 = GoldenInt::phi().pow(10) - GoldenInt::psi().pow(10);
        assert_eq!(
            d10.div_sqrt5().unwrap().to_integer().unwrap(),
            BigInt::from(55)
        );
        assert!(matches!(
            GoldenInt::one().div_sqrt5(),
            Err(RingError::NotDivisible(_))
        ));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(g(6, 0).to_integer().unwrap(), BigInt::from(3));
        assert_eq!(
            (GoldenInt::phi() * GoldenInt::psi()).to_integer().unwrap(),
            BigInt::from(-1)
        );
        assert!(matches!(
            GoldenInt::phi().to_integer(),
            Err(RingError::NotRational(_))
        ));
    }

    #[test]
    fn mixed_parity_rejected() {
        assert!(GoldenInt::new(1, 0).is_err());
    }

    #[test]
    fn sum_and_product_of_conjugates() {
        assert_eq!(GoldenInt::phi() + GoldenInt::psi(), GoldenInt::one());
        assert_eq!(GoldenInt::phi() * GoldenInt::psi(), -GoldenInt::one());
    }

    #[test]
    fn signed_powers() {
        assert_eq!(GoldenInt::phi_pow(-1) * GoldenInt::phi(), GoldenInt::one());
        assert_eq!(
            GoldenInt::psi_pow(-3) * GoldenInt::psi().pow(3),
            GoldenInt::one()
        );
    }

    #[test]
    fn unit_inverse() {
        let inv = GoldenInt::phi().pow(5).unit_inverse().unwrap();
        assert_eq!(inv * GoldenInt::phi().pow(5), GoldenInt::one());
        assert!(GoldenInt::sqrt5().unit_inverse().is_none());
    }

    #[test]
    fn display() {
        extern crate alloc;
        use alloc::string::ToString;
        assert_eq!(GoldenInt::phi().to_string(), "(1+1*sqrt(5))/2");
        assert_eq!(GoldenInt::from_integer(-4).to_string(), "-4");
    }
}
