use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::ring::GoldenInt;
use crate::scalar::ExactScalar;

/// `numer / sqrt(5)^sqrt5_power`, the shape of every closed form here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdValue {
    pub numer: GoldenInt,
    pub sqrt5_power: u32,
}

impl SurdValue {
    pub fn new(numer: GoldenInt, sqrt5_power: u32) -> Self {
        SurdValue { numer, sqrt5_power }.reduced()
    }

    /// Cancels common factors of `sqrt(5)`.
    fn reduced(mut self) -> Self {
        if self.numer.is_zero() {
            self.sqrt5_power = 0;
            return self;
        }
        while self.sqrt5_power > 0 {
            match self.numer.div_sqrt5() {
                Ok(q) => {
                    self.numer = q;
                    self.sqrt5_power -= 1;
                }
                Err(_) => break,
            }
        }
        self
    }

    /// The value as an exact scalar, or `None` when it is irrational.
    ///
    /// Ring elements that happen to be rational integers are returned as
    /// integers; other ring elements stay golden.
    pub fn to_exact(&self) -> Option<ExactScalar> {
        let e = self.sqrt5_power;
        if e == 0 {
            return Some(match self.numer.to_integer() {
                Ok(n) => ExactScalar::Integer(n),
                Err(_) => ExactScalar::Golden(self.numer.clone()),
            });
        }
        // numer / sqrt5^e with e odd equals (numer * sqrt5) / 5^((e+1)/2).
        let (top, fives) = if e.is_multiple_of(2) {
            (self.numer.clone(), e / 2)
        } else {
            (&self.numer * &GoldenInt::sqrt5(), e.div_ceil(2))
        };
        if !top.is_integer() {
            return None;
        }
        let denom: BigInt = BigInt::from(2) * Pow::pow(BigInt::from(5), fives);
        let r = BigRational::new(top.u().clone(), denom);
        Some(if r.denom().is_one() {
            ExactScalar::Integer(r.to_integer())
        } else {
            ExactScalar::Rational(r)
        })
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt5_power == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/sqrt(5)^{}", self.numer, self.sqrt5_power)
        }
    }
}

/// Right-hand side of an audited identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormValue {
    Exact(ExactScalar),
    /// Irrational, so it cannot be an integer sum.
    Irrational(SurdValue),
    /// Evaluation failed inside the engine.
    Unavailable,
}

impl ClosedFormValue {
    pub fn from_surd(v: SurdValue) -> Self {
        match v.to_exact() {
            Some(x) => ClosedFormValue::Exact(x),
            None => ClosedFormValue::Irrational(v),
        }
    }

    pub fn as_exact(&self) -> Option<&ExactScalar> {
        match self {
            ClosedFormValue::Exact(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormValue::Exact(x) => write!(f, "{x}"),
            ClosedFormValue::Irrational(s) => write!(f, "{s}"),
            ClosedFormValue::Unavailable => Ok(()),
        }
    }
}
