use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::RingError;
use crate::ring::GoldenInt;
use crate::sequences::binomial_row;

/// Weight `(±1)^k` applied to the k-th term of a binomial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_integer(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `Σ_{k=0..n} (±1)^k C(n,k) F_k^p` by direct summation, with `F_k` from
/// the plain recurrence.
pub fn fib_power_sum_oracle(n: u64, p: u64, sign: Sign) -> BigInt {
    let row = binomial_row(n);
    let (mut f, mut f_next) = (BigInt::zero(), BigInt::one());
    let mut acc = BigInt::zero();
    for (k, c) in row.iter().enumerate() {
        let term = c * num_traits::pow(f.clone(), p as usize);
        if sign == Sign::Minus && k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        let next = &f + &f_next;
        f = core::mem::replace(&mut f_next, next);
    }
    acc
}

/// The same sum computed in the golden ring: expand
/// `F_k^p = (phi^k - psi^k)^p / sqrt5^p` binomially, sum each geometric
/// term over `k` as `(1 ± phi^(p-r) psi^r)^n`, then divide out `sqrt5^p`.
pub fn fib_power_sum_binet(n: u64, p: u64, sign: Sign) -> Result<BigInt, RingError> {
    let w = GoldenInt::from_integer(sign.as_integer());
    let one = GoldenInt::one();
    let mut acc = GoldenInt::zero();
    for (r, c) in binomial_row(p).iter().enumerate() {
        let r = r as u64;
        let ratio = &GoldenInt::phi().pow(p - r) * &GoldenInt::psi().pow(r);
        let term = (&one + &(&w * &ratio)).pow(n);
        let term = &term * &GoldenInt::from_integer(c.clone());
        acc = if r % 2 == 1 {
            &acc - &term
        } else {
            &acc + &term
        };
    }
    for _ in 0..p {
        acc = acc.div_sqrt5()?;
    }
    acc.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(fib_power_sum_oracle(3, 1, Sign::Plus), BigInt::from(8));
        assert_eq!(fib_power_sum_oracle(4, 2, Sign::Plus), BigInt::from(35));
        for p in 1..5 {
            assert_eq!(fib_power_sum_oracle(0, p, Sign::Plus), BigInt::zero());
            assert_eq!(fib_power_sum_oracle(0, p, Sign::Minus), BigInt::zero());
        }
        assert_eq!(
            fib_power_sum_binet(3, 1, Sign::Plus).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(
            fib_power_sum_binet(4, 2, Sign::Plus).unwrap(),
            BigInt::from(35)
        );
    }

    #[test]
    fn oracles_agree_on_a_small_grid() {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in 0..=10 {
                for p in 1..=5 {
                    assert_eq!(
                        fib_power_sum_oracle(n, p, sign),
                        fib_power_sum_binet(n, p, sign).unwrap(),
                        "n={n} p={p} {sign:?}"
                    );
                }
            }
        }
        assert_eq!(
            fib_power_sum_oracle(6, 4, Sign::Minus),
            fib_power_sum_binet(6, 4, Sign::Minus).unwrap()
        );
    }
}
