//! Deterministic property suites over the transform calculus.
//!
//! Every suite is seeded, so two runs with the same `(n_max, seed)` perform
//! the same checks on the same data.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::GoldenInt;
use crate::scalar::ExactScalar;
use crate::sequences::binomial;
use crate::transforms::{
    binomial_transform, corollary1_eval, corollary2_eval, inverse_transform, lemma2_lhs,
    lemma2_weighted_lhs, lemma3_sum, nabla_direct, nabla_sum, nabla_weighted, theorem1_eval, Seq,
};

/// Number of random sequences in the round-trip suite.
pub const ROUND_TRIP_SAMPLES: usize = 200;

/// Bound on the magnitude of random sequence entries.
const ENTRY_BOUND: i64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    RoundTrip,
    Lemma1,
    Lemma2,
    Lemma3,
    Theorem1,
    Corollary1,
    Corollary2,
    Gould,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::RoundTrip,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Theorem1,
        Suite::Corollary1,
        Suite::Corollary2,
        Suite::Gould,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RoundTrip => "round-trip",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Theorem1 => "theorem1",
            Suite::Corollary1 => "corollary1",
            Suite::Corollary2 => "corollary2",
            Suite::Gould => "gould",
        }
    }

    /// Runs the suite over indices `0..=n_max`.
    pub fn run(self, n_max: u64, seed: u64) -> SuiteReport {
        // Each suite gets its own stream so suites can run in any order.
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (self as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let n_max = n_max as usize;
        let mut t = Tally::default();
        match self {
            Suite::RoundTrip => round_trip(&mut rng, n_max, &mut t),
            Suite::Lemma1 => lemma1(&mut rng, n_max, &mut t),
            Suite::Lemma2 => lemma2(&mut rng, n_max, &mut t),
            Suite::Lemma3 => lemma3(n_max, &mut t),
            Suite::Theorem1 => theorem1(&mut rng, n_max, &mut t),
            Suite::Corollary1 => corollary(&mut rng, n_max, &mut t, false),
            Suite::Corollary2 => corollary(&mut rng, n_max, &mut t, true),
            Suite::Gould => gould(n_max, &mut t),
        }
        SuiteReport {
            suite: self,
            checks: t.checks,
            failures: t.failures,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failures: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs every suite in order.
pub fn run_all(n_max: u64, seed: u64) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| s.run(n_max, seed)).collect()
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
}

impl Tally {
    fn check(&mut self, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn equal<T: PartialEq, E>(&mut self, a: Result<T, E>, b: Result<T, E>) {
        self.check(matches!((a, b), (Ok(x), Ok(y)) if x == y));
    }
}

/// A random integer sequence of the given length.
pub fn random_seq(rng: &mut ChaCha8Rng, len: usize) -> Seq {
    let span = (2 * ENTRY_BOUND + 1) as u64;
    let values = (0..len).map(|_| (rng.next_u64() % span) as i64 - ENTRY_BOUND);
    Seq::from_integers(values).expect("non-empty sequence")
}

fn scaled(
    x: Result<ExactScalar, crate::error::TransformError>,
    k: BigInt,
) -> Result<ExactScalar, ()> {
    let x = x.map_err(|_| ())?;
    x.try_mul(&ExactScalar::Integer(k)).map_err(|_| ())
}

fn round_trip(rng: &mut ChaCha8Rng, n_max: usize, t: &mut Tally) {
    for _ in 0..ROUND_TRIP_SAMPLES {
        let len = 1 + (rng.next_u64() % (n_max as u64 + 1)) as usize;
        let a = random_seq(rng, len);
        t.check(inverse_transform(&binomial_transform(&a)) == a);
        t.check(binomial_transform(&inverse_transform(&a)) == a);
    }
}

fn lemma1(rng: &mut ChaCha8Rng, n_max: usize, t: &mut Tally) {
    let b = random_seq(rng, n_max + 1);
    for n in 0..=n_max {
        for m in 0..=n {
            t.equal(nabla_direct(&b, m, n), nabla_sum(&b, m, n));
            let weight = binomial(n as u64, m as i64);
            t.equal(
                nabla_weighted(&b, m, n).map_err(|_| ()),
                scaled(nabla_sum(&b, m, n), weight),
            );
        }
    }
}

fn lemma2(rng: &mut ChaCha8Rng, n_max: usize, t: &mut Tally) {
    let a = random_seq(rng, n_max + 1);
    let b = binomial_transform(&a);
    for n in 0..=n_max {
        for m in 0..=n {
            t.equal(lemma2_lhs(&a, m, n), nabla_sum(&b, m, n));
            let weight = binomial(n as u64, m as i64);
            t.equal(
                lemma2_weighted_lhs(&a, m, n).map_err(|_| ()),
                scaled(nabla_sum(&b, m, n), weight),
            );
        }
    }
}

fn lemma3(n_max: usize, t: &mut Tally) {
    for n in 1..=n_max as u64 {
        for m in 1..=n {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let expected =
                ExactScalar::Rational(BigRational::new(BigInt::from(sign), BigInt::from(m)));
            t.check(lemma3_sum(n, m).is_ok_and(|v| v == expected));
        }
    }
}

fn theorem1(rng: &mut ChaCha8Rng, n_max: usize, t: &mut Tally) {
    for len in 1..=n_max + 1 {
        for _ in 0..2 {
            let a = random_seq(rng, len);
            let c = random_seq(rng, len);
            t.check(match theorem1_eval(&a, &c) {
                Ok((lhs, r8, r81)) => lhs == r8 && r8 == r81,
                Err(_) => false,
            });
        }
    }
}

/// The evaluation points shared by both corollaries.
pub fn corollary_points() -> Vec<ExactScalar> {
    alloc::vec![
        ExactScalar::int(0),
        ExactScalar::int(1),
        ExactScalar::int(-1),
        ExactScalar::Rational(BigRational::new(BigInt::one(), BigInt::from(2))),
        ExactScalar::int(2),
        ExactScalar::Golden(GoldenInt::phi()),
        ExactScalar::Golden(GoldenInt::psi()),
    ]
}

fn corollary(rng: &mut ChaCha8Rng, n_max: usize, t: &mut Tally, second: bool) {
    let points = corollary_points();
    for len in 1..=n_max + 1 {
        let s = random_seq(rng, len);
        for x in &points {
            let r = if second {
                corollary2_eval(&s, x)
            } else {
                corollary1_eval(&s, x)
            };
            t.check(matches!(r, Ok((l, r)) if l == r));
        }
    }
}

fn gould(n_max: usize, t: &mut Tally) {
    let n_max = n_max as u64;
    for n in 0..=n_max {
        for m in 0..=n {
            for l in 0..=n {
                t.check(gould_349(m, n, l) == binomial(n - m, l as i64 - m as i64));
            }
            if m >= 1 {
                let expected = BigRational::new(BigInt::one(), binomial(n, (n - m) as i64));
                t.check(gould_141(m, n) == expected);
            }
        }
    }
}

/// `Σ_{k=0..m} C(m,k) C(n-k,l) (-1)^k`.
pub fn gould_349(m: u64, n: u64, l: u64) -> BigInt {
    (0..=m).fold(BigInt::zero(), |acc, k| {
        let term = binomial(m, k as i64) * binomial(n - k, l as i64);
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `Σ_{j=0..n-m} C(n-m,j) (-1)^j m/(m+j)`, for `1 ≤ m ≤ n`.
pub fn gould_141(m: u64, n: u64) -> BigRational {
    (0..=n - m).fold(BigRational::zero(), |acc, j| {
        let sign: i64 = if j % 2 == 0 { 1 } else { -1 };
        let numer = binomial(n - m, j as i64) * BigInt::from(sign * m as i64);
        acc + BigRational::new(numer, BigInt::from(m + j))
    })
}
