//! Exact binomial transforms, Fibonacci and Lucas numbers, the golden ring
//! `Z[phi]`, and an auditor for binomial sums of Fibonacci powers.
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! reduced fractions, and irrational values live in the ring of integers of
//! `Q(sqrt 5)`. The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod identities;
pub mod ring;
pub mod scalar;
pub mod sequences;
pub mod transforms;
pub mod verify;

pub use error::{IdentityError, RingError, ScalarError, SequenceError, TransformError};
pub use identities::{AuditEntry, AuditReport, ClosedFormValue, IdentityFamily, Reading, Verdict};
pub use ring::GoldenInt;
pub use scalar::{Domain, ExactScalar, Scalar};
pub use sequences::{build_coeff_table, fib, lucas, CoeffKind, CoeffTable};
pub use transforms::Seq;
