//! Exact value domain shared by every sum in the crate.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ScalarError;
use crate::ring::GoldenInt;
use crate::transforms::Seq;

/// The three exact domains, ordered by promotion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Domain {
    Integer,
    Rational,
    Golden,
}

/// Arithmetic needed by the generic sum evaluators.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const DOMAIN: Domain;

    fn from_integer(n: BigInt) -> Self;

    fn into_exact(self) -> ExactScalar;

    fn into_seq(values: alloc::vec::Vec<Self>) -> Seq;

    fn scale(&self, k: &BigInt) -> Self {
        Self::from_integer(k.clone()) * self.clone()
    }
}

impl Scalar for BigInt {
    const DOMAIN: Domain = Domain::Integer;
    fn from_integer(n: BigInt) -> Self {
        n
    }
    fn into_exact(self) -> ExactScalar {
        ExactScalar::Integer(self)
    }
    fn into_seq(values: alloc::vec::Vec<Self>) -> Seq {
        Seq::Integer(values)
    }
    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl Scalar for BigRational {
    const DOMAIN: Domain = Domain::Rational;
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
    fn into_exact(self) -> ExactScalar {
        ExactScalar::Rational(self)
    }
    fn into_seq(values: alloc::vec::Vec<Self>) -> Seq {
        Seq::Rational(values)
    }
}

impl Scalar for GoldenInt {
    const DOMAIN: Domain = Domain::Golden;
    fn from_integer(n: BigInt) -> Self {
        GoldenInt::from_integer(n)
    }
    fn into_exact(self) -> ExactScalar {
        ExactScalar::Golden(self)
    }
    fn into_seq(values: alloc::vec::Vec<Self>) -> Seq {
        Seq::Golden(values)
    }
}

/// A tagged exact number.
///
/// Promotion runs Integer → Rational → Golden and only succeeds when it is
/// exact; a rational with denominator other than one has no image in the
/// golden ring. Demotion never happens implicitly.
#[derive(Clone, Debug)]
pub enum ExactScalar {
    Integer(BigInt),
    Rational(BigRational),
    Golden(GoldenInt),
}

impl ExactScalar {
    pub fn int(n: impl Into<BigInt>) -> Self {
        ExactScalar::Integer(n.into())
    }

    /// Normalized `numer/denom`; errors on a zero denominator.
    pub fn ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ScalarError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(ExactScalar::Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn domain(&self) -> Domain {
        match self {
            ExactScalar::Integer(_) => Domain::Integer,
            ExactScalar::Rational(_) => Domain::Rational,
            ExactScalar::Golden(_) => Domain::Golden,
        }
    }

    pub fn promote(&self, target: Domain) -> Result<ExactScalar, ScalarError> {
        use ExactScalar::*;
        match (self, target) {
            (_, t) if t == self.domain() => Ok(self.clone()),
            (Integer(n), Domain::Rational) => Ok(Rational(BigRational::from_integer(n.clone()))),
            (Integer(n), Domain::Golden) => Ok(Golden(GoldenInt::from_integer(n.clone()))),
            (Rational(r), Domain::Golden) if r.is_integer() => {
                Ok(Golden(GoldenInt::from_integer(r.to_integer())))
            }
            _ => Err(ScalarError::IncompatibleDomains(self.domain(), target)),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            ExactScalar::Integer(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_golden(&self) -> Option<&GoldenInt> {
        match self {
            ExactScalar::Golden(g) => Some(g),
            _ => None,
        }
    }

    fn binary<F, G, H>(
        &self,
        rhs: &ExactScalar,
        on_int: F,
        on_rat: G,
        on_golden: H,
    ) -> Result<ExactScalar, ScalarError>
    where
        F: FnOnce(&BigInt, &BigInt) -> BigInt,
        G: FnOnce(&BigRational, &BigRational) -> BigRational,
        H: FnOnce(&GoldenInt, &GoldenInt) -> GoldenInt,
    {
        use ExactScalar::*;
        let target = self.domain().max(rhs.domain());
        let (a, b) = (self.promote(target)?, rhs.promote(target)?);
        Ok(match (&a, &b) {
            (Integer(x), Integer(y)) => Integer(on_int(x, y)),
            (Rational(x), Rational(y)) => Rational(on_rat(x, y)),
            (Golden(x), Golden(y)) => Golden(on_golden(x, y)),
            _ => unreachable!("operands promoted to one domain"),
        })
    }

    pub fn try_add(&self, rhs: &ExactScalar) -> Result<ExactScalar, ScalarError> {
        self.binary(rhs, |a, b| a + b, |a, b| a + b, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &ExactScalar) -> Result<ExactScalar, ScalarError> {
        self.binary(rhs, |a, b| a - b, |a, b| a - b, |a, b| a - b)
    }

    pub fn try_mul(&self, rhs: &ExactScalar) -> Result<ExactScalar, ScalarError> {
        self.binary(rhs, |a, b| a * b, |a, b| a * b, |a, b| a * b)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Integer(n) => n.is_zero(),
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Golden(g) => g.is_zero(),
        }
    }

    // Rational value, if the number has one.
    fn rational_value(&self) -> Option<BigRational> {
        match self {
            ExactScalar::Integer(n) => Some(BigRational::from_integer(n.clone())),
            ExactScalar::Rational(r) => Some(r.clone()),
            ExactScalar::Golden(g) if g.is_integer() => {
                Some(BigRational::new(g.u().clone(), BigInt::from(2)))
            }
            ExactScalar::Golden(_) => None,
        }
    }
}

impl PartialEq for ExactScalar {
    /// Value equality across domains.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactScalar::Golden(a), ExactScalar::Golden(b)) => a == b,
            _ => match (self.rational_value(), other.rational_value()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl Eq for ExactScalar {}

impl PartialOrd for ExactScalar {
    /// Ordered only when both values are rational.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.rational_value()?.cmp(&other.rational_value()?))
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Integer(n) => ExactScalar::Integer(-n),
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Golden(g) => ExactScalar::Golden(-g),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Integer(n) => write!(f, "{n}"),
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Golden(g) => write!(f, "{g}"),
        }
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::Integer(n)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::Integer(n.into())
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<GoldenInt> for ExactScalar {
    fn from(g: GoldenInt) -> Self {
        ExactScalar::Golden(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = ExactScalar::ratio(6, -4).unwrap();
        let q = r.as_rational().unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(ExactScalar::ratio(1, 0), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn promotion_goes_upward_only() {
        let n = ExactScalar::int(3);
        let half = ExactScalar::ratio(1, 2).unwrap();
        let phi = ExactScalar::Golden(GoldenInt::phi());

        assert_eq!(n.try_add(&half).unwrap().domain(), Domain::Rational);
        assert_eq!(n.try_mul(&phi).unwrap().domain(), Domain::Golden);
        assert!(matches!(
            half.try_add(&phi),
            Err(ScalarError::IncompatibleDomains(
                Domain::Rational,
                Domain::Golden
            ))
        ));
        assert!(phi.promote(Domain::Integer).is_err());
    }

    #[test]
    fn integral_rational_promotes_to_golden() {
        let two = ExactScalar::ratio(4, 2).unwrap();
        let sum = two.try_add(&ExactScalar::Golden(GoldenInt::phi())).unwrap();
        assert_eq!(sum, ExactScalar::Golden(GoldenInt::new(5, 1).unwrap()));
    }

    #[test]
    fn equality_is_by_value() {
        assert_eq!(ExactScalar::int(2), ExactScalar::ratio(4, 2).unwrap());
        assert_eq!(
            ExactScalar::int(-1),
            ExactScalar::Golden(GoldenInt::new(-2, 0).unwrap())
        );
        assert_ne!(ExactScalar::int(1), ExactScalar::Golden(GoldenInt::phi()));
    }
}
