use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SurdValue;
use crate::error::{IdentityError, RingError};
use crate::ring::GoldenInt;
use crate::sequences::{binomial_row, fib, lucas};

fn golden(n: BigInt) -> GoldenInt {
    GoldenInt::from_integer(n)
}

/// Both sides of the `index`-th golden power relation at `p`.
///
/// Indices 1-6 are relations in `phi`, 7-12 the conjugate relations in
/// `psi`, e.g. index 1 is `phi^4p + 1 = phi^2p L_2p`.
pub fn remark1_relation(p: u64, index: u8) -> Result<(GoldenInt, GoldenInt), IdentityError> {
    if p < 1 || !(1..=12).contains(&index) {
        return Err(IdentityError::NotApplicable { n: 0, p });
    }
    let conj = index > 6;
    let base = if conj {
        GoldenInt::psi()
    } else {
        GoldenInt::phi()
    };
    // psi-relations with a sqrt5 factor pick up a minus sign.
    let sqrt5 = if conj {
        -GoldenInt::sqrt5()
    } else {
        GoldenInt::sqrt5()
    };
    let one = GoldenInt::one();
    let pw = |e: u64| base.pow(e);
    let f = |k: u64| golden(fib(k));
    let l = |k: u64| golden(lucas(k));
    let (lhs, rhs) = match (index - 1) % 6 {
        0 => (&pw(4 * p) + &one, &pw(2 * p) * &l(2 * p)),
        1 => (&pw(4 * p) - &one, &(&pw(2 * p) * &sqrt5) * &f(2 * p)),
        2 => (
            &pw(4 * p - 2) + &one,
            &(&pw(2 * p - 1) * &sqrt5) * &f(2 * p - 1),
        ),
        3 => (
            &pw(4 * p + 2) + &one,
            &(&pw(2 * p + 1) * &sqrt5) * &f(2 * p + 1),
        ),
        4 => (&pw(4 * p - 2) - &one, &pw(2 * p - 1) * &l(2 * p - 1)),
        _ => (&pw(4 * p + 2) - &one, &pw(2 * p + 1) * &l(2 * p + 1)),
    };
    Ok((lhs, rhs))
}

/// The four weighted Fibonacci sums `Σ C(n,k) z^k F_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prop1Variant {
    /// `z = phi^p`
    V811,
    /// `z = -phi^p`
    V812,
    /// `z = psi^p`
    V813,
    /// `z = -psi^p`
    V814,
}

impl Prop1Variant {
    pub const ALL: [Prop1Variant; 4] = [
        Prop1Variant::V811,
        Prop1Variant::V812,
        Prop1Variant::V813,
        Prop1Variant::V814,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Prop1Variant::V811 => "811",
            Prop1Variant::V812 => "812",
            Prop1Variant::V813 => "813",
            Prop1Variant::V814 => "814",
        }
    }
}

/// Weighted sum and its closed form, both in the ring.
pub fn prop1_eval(
    n: u64,
    p: u64,
    variant: Prop1Variant,
) -> Result<(GoldenInt, GoldenInt), IdentityError> {
    let (lhs, rhs) = prop1_sides(n, p, variant);
    if rhs.sqrt5_power > 0 {
        return Err(IdentityError::Ring(RingError::NotDivisible(rhs.numer)));
    }
    Ok((lhs, rhs.numer))
}

/// Like [`prop1_eval`], but keeps a right side that is not in the ring.
pub(crate) fn prop1_sides(n: u64, p: u64, variant: Prop1Variant) -> (GoldenInt, SurdValue) {
    use Prop1Variant::*;
    let p = p as i64;
    let (x, sign) = match variant {
        V811 => (GoldenInt::phi_pow(p), 1),
        V812 => (GoldenInt::phi_pow(p), -1),
        V813 => (GoldenInt::psi_pow(p), 1),
        V814 => (GoldenInt::psi_pow(p), -1),
    };
    let z = &x * &GoldenInt::from_integer(sign);

    let mut lhs = GoldenInt::zero();
    let mut zk = GoldenInt::one();
    for (k, c) in binomial_row(n).iter().enumerate() {
        lhs = &lhs + &(&zk * &golden(c * fib(k as u64)));
        zk = &zk * &z;
    }

    let one = GoldenInt::one();
    let parity = GoldenInt::from_integer(if n.is_multiple_of(2) { 1 } else { -1 });
    let (phi_up, phi_down) = (GoldenInt::phi_pow(p + 1), GoldenInt::phi_pow(p - 1));
    let (psi_up, psi_down) = (GoldenInt::psi_pow(p + 1), GoldenInt::psi_pow(p - 1));
    let numer = match variant {
        V811 => &(&phi_up + &one).pow(n) - &(&parity * &(&phi_down - &one).pow(n)),
        V812 => &(&parity * &(&phi_up - &one).pow(n)) - &(&phi_down + &one).pow(n),
        V813 => &(&parity * &(&psi_down - &one).pow(n)) - &(&psi_up + &one).pow(n),
        V814 => &(&psi_down + &one).pow(n) - &(&parity * &(&psi_up - &one).pow(n)),
    };
    (lhs, SurdValue::new(numer, 1))
}
