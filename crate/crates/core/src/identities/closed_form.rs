//! The printed closed forms, evaluated literally.
//!
//! Each evaluator builds the bracketed sum as a ring element and returns it
//! together with the power of `1/sqrt(5)` in front. Conventions: `0^0 = 1`,
//! and `q(-1, c) = s(-1, c) = 0` (empty defining sum) when `n = 0`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IdentityFamily, IndexReading, Reading, SurdValue};
use crate::error::IdentityError;
use crate::ring::GoldenInt;
use crate::scalar::ExactScalar;
use crate::sequences::{binomial, build_coeff_table, fib, lucas, CoeffKind, CoeffTable};

fn g(n: BigInt) -> GoldenInt {
    GoldenInt::from_integer(n)
}

fn c(n: u64, k: u64) -> BigInt {
    binomial(n, k as i64)
}

fn big_pow(x: BigInt, e: u64) -> BigInt {
    num_traits::pow(x, e as usize)
}

fn sqrt5_pow(e: u64) -> GoldenInt {
    GoldenInt::sqrt5().pow(e)
}

fn parity_sign(n: u64) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Every reading audited for a family, the printed one first.
pub fn readings(family: IdentityFamily) -> Vec<Reading> {
    use IdentityFamily::*;
    match family {
        T4Even => [IndexReading::Joint, IndexReading::Product]
            .into_iter()
            .map(|index| Reading::Alternating {
                index,
                swapped_prefactor: false,
            })
            .collect(),
        T4Odd => {
            let mut v = Vec::new();
            for swapped_prefactor in [false, true] {
                for index in [IndexReading::Joint, IndexReading::Product] {
                    v.push(Reading::Alternating {
                        index,
                        swapped_prefactor,
                    });
                }
            }
            v
        }
        T6 | T7 => {
            let printed_q_terms = family == T7;
            let printed_q_inner = family == T7;
            let mut v = Vec::new();
            for q_terms_to_p in [printed_q_terms, !printed_q_terms] {
                for q_inner_to_n in [printed_q_inner, !printed_q_inner] {
                    for s_inner_to_n in [false, true] {
                        v.push(Reading::Limits {
                            q_terms_to_p,
                            q_inner_to_n,
                            s_inner_to_n,
                        });
                    }
                }
            }
            v
        }
        _ => alloc::vec![Reading::Printed],
    }
}

/// Closed form of a Fibonacci-power family at `(n, p)` under `reading`, as
/// `numer / sqrt(5)^k`.
pub fn closed_form_value(
    family: IdentityFamily,
    reading: Reading,
    n: u64,
    p: u64,
) -> Result<SurdValue, IdentityError> {
    use IdentityFamily::*;
    if family.fib_power(p).is_none() || !family.applies(n, p) {
        return Err(IdentityError::NotApplicable { n, p });
    }
    if !readings(family).contains(&reading) {
        return Err(IdentityError::Precondition(
            "reading does not belong to this family",
        ));
    }
    let (numer, power) = match (family, reading) {
        (T2, _) => wessner_plus_even(n, p),
        (T3, _) => wessner_plus_oddtwo(n, p),
        (T4Even, Reading::Alternating { index, .. }) => alternating_even(n, p, index),
        (
            T4Odd,
            Reading::Alternating {
                index,
                swapped_prefactor,
            },
        ) => alternating_odd(n, p, index, swapped_prefactor),
        (T5, _) => wessner_minus_oddtwo(n, p),
        (
            T6,
            Reading::Limits {
                q_terms_to_p,
                q_inner_to_n,
                s_inner_to_n,
            },
        ) => {
            let limits = Limits {
                q_terms_last: if q_terms_to_p { p as i64 } else { p as i64 - 1 },
                q_inner_to_n,
                s_inner_to_n,
            };
            hoggatt_one(n, p, limits)
        }
        (
            T7,
            Reading::Limits {
                q_terms_to_p,
                q_inner_to_n,
                s_inner_to_n,
            },
        ) => {
            let limits = Limits {
                q_terms_last: if q_terms_to_p { p as i64 } else { p as i64 - 1 },
                q_inner_to_n,
                s_inner_to_n,
            };
            hoggatt_three(n, p, limits)
        }
        _ => unreachable!("reading checked against family"),
    };
    Ok(SurdValue::new(numer, power))
}

/// [`closed_form_value`] as an exact scalar; irrational values are an error.
pub fn closed_form_rhs(
    family: IdentityFamily,
    reading: Reading,
    n: u64,
    p: u64,
) -> Result<ExactScalar, IdentityError> {
    let value = closed_form_value(family, reading, n, p)?;
    value.to_exact().ok_or(IdentityError::Irrational(value))
}

// Σ C(n,k) F_k^{4p}:
// (1/√5)^{4p} ( C(4p,2p) 2^n + Σ_{i<2p} (±1)^i C(4p,i) L_{2p-i}^n L_{(2p-i)n} ),
// with (-1)^i for even n and no sign for odd n.
fn wessner_plus_even(n: u64, p: u64) -> (GoldenInt, u32) {
    let mut acc = c(4 * p, 2 * p) * big_pow(BigInt::from(2), n);
    for i in 0..2 * p {
        let m = 2 * p - i;
        let term = c(4 * p, i) * big_pow(lucas(m), n) * lucas(m * n);
        if n.is_multiple_of(2) && i % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    (g(acc), (4 * p) as u32)
}

// Σ C(n,k) F_k^{4p+2}:
// (1/√5)^{4p+2} Σ_{i=0}^{2p+1} (±1)^i C(4p+2,i) (√5 F_{2p-i+1})^n L_{(2p-i+1)n}.
fn wessner_plus_oddtwo(n: u64, p: u64) -> (GoldenInt, u32) {
    let root = sqrt5_pow(n);
    let mut acc = GoldenInt::zero();
    for i in 0..=2 * p + 1 {
        let m = 2 * p + 1 - i;
        let coeff = c(4 * p + 2, i) * big_pow(fib(m), n) * lucas(m * n);
        let term = &root * &g(coeff);
        acc = if n.is_multiple_of(2) && i % 2 == 1 {
            &acc - &term
        } else {
            &acc + &term
        };
    }
    (acc, (4 * p + 2) as u32)
}

// Σ (-1)^k C(n,k) F_k^{4p}, n even:
// (1/√5)^{4p} Σ_{i=0}^{2p} (-1)^i C(4p,i) L_{[2p-i]n} (√5 F_{(2p-i)n})^n.
fn alternating_even(n: u64, p: u64, index: IndexReading) -> (GoldenInt, u32) {
    let root = sqrt5_pow(n);
    let mut acc = GoldenInt::zero();
    for i in 0..=2 * p {
        let m = 2 * p - i;
        let lead = match index {
            IndexReading::Joint => lucas(m * n),
            IndexReading::Product => lucas(m) * n,
        };
        let coeff = c(4 * p, i) * lead * big_pow(fib(m * n), n);
        let term = &root * &g(coeff);
        acc = if i % 2 == 1 {
            &acc - &term
        } else {
            &acc + &term
        };
    }
    (acc, (4 * p) as u32)
}

// Σ (-1)^k C(n,k) F_k^{4p}, n odd:
// (1/√5)^{4p-1} Σ_{i=0}^{2p} (-1)^i C(4p,i) F_{[2p-i]n} (√5 F_{(2p-i)n})^n.
fn alternating_odd(
    n: u64,
    p: u64,
    index: IndexReading,
    swapped_prefactor: bool,
) -> (GoldenInt, u32) {
    let root = sqrt5_pow(n);
    let mut acc = GoldenInt::zero();
    for i in 0..=2 * p {
        let m = 2 * p - i;
        let lead = match index {
            IndexReading::Joint => fib(m * n),
            IndexReading::Product => fib(m) * n,
        };
        let coeff = c(4 * p, i) * lead * big_pow(fib(m * n), n);
        let term = &root * &g(coeff);
        acc = if i % 2 == 1 {
            &acc - &term
        } else {
            &acc + &term
        };
    }
    let power = if swapped_prefactor { 4 * p } else { 4 * p - 1 };
    (acc, power as u32)
}

// Σ (-1)^k C(n,k) F_k^{4p+2}:
// even n: (1/√5)^{4p+2} ( Σ_{i=0}^{2p} (-1)^i C(4p+2,i) L_{2p+1-i}^n L_{(2p+1-i)n} + C(4p+2,2p+1) 2^n )
// odd n: -(1/√5)^{4p+2} ( Σ_{i=0}^{2p} C(4p+2,i) L_{2p+1-i}^n L_{(2p+1-i)n} + C(4p+2,2p+1) 2^n )
fn wessner_minus_oddtwo(n: u64, p: u64) -> (GoldenInt, u32) {
    let mut acc = c(4 * p + 2, 2 * p + 1) * big_pow(BigInt::from(2), n);
    for i in 0..=2 * p {
        let m = 2 * p + 1 - i;
        let term = c(4 * p + 2, i) * big_pow(lucas(m), n) * lucas(m * n);
        if n.is_multiple_of(2) && i % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    (g(acc), (4 * p + 2) as u32)
}

#[derive(Clone, Copy)]
struct Limits {
    q_terms_last: i64,
    q_inner_to_n: bool,
    s_inner_to_n: bool,
}

/// `{ Σ_{j=1}^{last} t(n-1,j) L_{mj} + t(n-1,0) }`, zero when `n = 0`.
fn braced_lucas_sum(table: Option<&CoeffTable>, n: u64, m: u64, to_n: bool) -> BigInt {
    let Some(table) = table else {
        return BigInt::zero();
    };
    let last = if to_n { n } else { n - 1 };
    let at = |j: u64| table.get(n - 1, j).unwrap_or_default();
    (1..=last).fold(at(0), |acc, j| acc + at(j) * lucas(m * j))
}

fn tables(n: u64) -> (Option<CoeffTable>, Option<CoeffTable>) {
    if n == 0 {
        return (None, None);
    }
    let q = build_coeff_table(CoeffKind::Q, n - 1).expect("q recurrences hold");
    let s = build_coeff_table(CoeffKind::S, n - 1).expect("s recurrences hold");
    (Some(q), Some(s))
}

// Σ C(n,k) F_k^{4p+1}:
// (1/√5)^{4p} ( Σ_{t=0}^{p-1} C(4p+1,2t) F_{4p-4t+1} {q-sum}
//   - (-1)^n Σ_{t=0}^{p-1} C(4p+1,2t+1) F_{4p-4t-1} {s-sum} + C(4p+1,2p) F_{2n} ).
fn hoggatt_one(n: u64, p: u64, limits: Limits) -> (GoldenInt, u32) {
    let (q, s) = tables(n);
    let mut acc = BigInt::zero();
    for t in 0..=limits.q_terms_last {
        let t = t as u64;
        let m = 4 * p - 4 * t + 1;
        acc +=
            c(4 * p + 1, 2 * t) * fib(m) * braced_lucas_sum(q.as_ref(), n, m, limits.q_inner_to_n);
    }
    let mut second = BigInt::zero();
    for t in 0..p {
        let m = 4 * p - 4 * t - 1;
        second += c(4 * p + 1, 2 * t + 1)
            * fib(m)
            * braced_lucas_sum(s.as_ref(), n, m, limits.s_inner_to_n);
    }
    acc -= parity_sign(n) * second;
    acc += c(4 * p + 1, 2 * p) * fib(2 * n);
    (g(acc), (4 * p) as u32)
}

// Σ C(n,k) F_k^{4p+3}:
// (1/√5)^{4p+2} ( Σ_{t=0}^{p} C(4p+3,2t) F_{4p-4t+3} {q-sum to n}
//   - (-1)^n Σ_{t=0}^{p-1} C(4p+3,2t+1) F_{4p-4t+1} {s-sum to n-1} + C(4p+3,2p+1) F_n ).
fn hoggatt_three(n: u64, p: u64, limits: Limits) -> (GoldenInt, u32) {
    let (q, s) = tables(n);
    let mut acc = BigInt::zero();
    for t in 0..=limits.q_terms_last {
        let t = t as u64;
        let m = 4 * p - 4 * t + 3;
        acc +=
            c(4 * p + 3, 2 * t) * fib(m) * braced_lucas_sum(q.as_ref(), n, m, limits.q_inner_to_n);
    }
    let mut second = BigInt::zero();
    for t in 0..p {
        let m = 4 * p - 4 * t + 1;
        second += c(4 * p + 3, 2 * t + 1)
            * fib(m)
            * braced_lucas_sum(s.as_ref(), n, m, limits.s_inner_to_n);
    }
    acc -= parity_sign(n) * second;
    acc += c(4 * p + 3, 2 * p + 1) * fib(n);
    (g(acc), (4 * p + 2) as u32)
}
