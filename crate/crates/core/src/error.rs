use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::GoldenInt;
use crate::scalar::Domain;
use crate::sequences::CoeffKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("({u} + {v}*sqrt(5))/2 is not an algebraic integer: u and v differ in parity")]
    Parity { u: BigInt, v: BigInt },
    #[error("{0} is not divisible by sqrt(5) in the ring")]
    NotDivisible(GoldenInt),
    #[error("{0} is not rational")]
    NotRational(GoldenInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot combine a {0:?} value with a {1:?} value exactly")]
    IncompatibleDomains(Domain, Domain),
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("{kind:?}({n}, {c}): recurrence gives {recurrence}, definition gives {definition}")]
    RecurrenceMismatch {
        kind: CoeffKind,
        n: u64,
        c: u64,
        recurrence: BigInt,
        definition: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("sequence must have at least one element")]
    Empty,
    #[error("index out of range: m={m}, n={n}, len={len}")]
    Index { m: usize, n: usize, len: usize },
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("identity is not applicable at n={n}, p={p}")]
    NotApplicable { n: u64, p: u64 },
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("value {0} is irrational")]
    Irrational(crate::identities::SurdValue),
    #[error(transparent)]
    Ring(#[from] RingError),
}
