//! Fibonacci and Lucas numbers, binomial coefficients, and the alternating
//! binomial families `q(n, c)` and `s(n, c)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SequenceError;

/// `(F(n), L(n))` by fast doubling.
pub fn fib_lucas(n: u64) -> (BigInt, BigInt) {
    let (f, f1) = fib_pair(n);
    let l = (&f1 << 1) - &f;
    (f, l)
}

// (F(n), F(n+1)), scanning the bits of n from the top.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let c = &a * ((&b << 1) - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// `F(n)` with `F(0) = 0`, `F(1) = 1`.
pub fn fib(n: u64) -> BigInt {
    fib_pair(n).0
}

/// `L(n)` with `L(0) = 2`, `L(1) = 1`.
pub fn lucas(n: u64) -> BigInt {
    fib_lucas(n).1
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle, `C(n, 0..=n)`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// Rows `0..=n_max` of Pascal's triangle.
pub fn pascal_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// `q(n, c) = Σ_{m=0..n} (-1)^m C(n+1, 2m+c+1)`.
pub fn q_coeff(n: u64, c: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 0..=n {
        let k = 2 * m + c + 1;
        if k > n + 1 {
            break;
        }
        let term = binomial(n + 1, k as i64);
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `s(n, c) = (-1)^(n+c) q(n, c)`.
pub fn s_coeff(n: u64, c: u64) -> BigInt {
    let q = q_coeff(n, c);
    if (n + c).is_multiple_of(2) {
        q
    } else {
        -q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoeffKind {
    Q,
    S,
}

impl CoeffKind {
    pub fn definition(self, n: u64, c: u64) -> BigInt {
        match self {
            CoeffKind::Q => q_coeff(n, c),
            CoeffKind::S => s_coeff(n, c),
        }
    }
}

/// One of the printed recurrences for `q` or `s`, each stated as a formula
/// for the entry at `(n+1, c)` in terms of row `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recurrence {
    /// `q(n+1,c) = q(n,c-1) + q(n,c)` for `n ≥ c ≥ 1`.
    QPascal,
    /// `q(n+1,c) = C(n+1,c) - q(n,c+1) + q(n,c)` for `n ≥ c ≥ 0`.
    QComplement,
    /// `s(n+1,0) = s(n,1) - s(n,0) + (-1)^(n+1) C(n+1,0)` for `n ≥ 1`.
    SZeroColumn,
    /// `s(n+1,c) = s(n,c-1) - s(n,c)` for `n > c ≥ 1`.
    SPascal,
    /// `s(n+1,c) = (-1)^(n-c+1) C(n+1,c) - s(n,c+1) - s(n,c)` for `n > c ≥ 1`.
    SComplement,
}

impl Recurrence {
    pub const ALL: [Recurrence; 5] = [
        Recurrence::QPascal,
        Recurrence::QComplement,
        Recurrence::SZeroColumn,
        Recurrence::SPascal,
        Recurrence::SComplement,
    ];

    pub fn kind(self) -> CoeffKind {
        match self {
            Recurrence::QPascal | Recurrence::QComplement => CoeffKind::Q,
            _ => CoeffKind::S,
        }
    }

    /// Whether `(n, c)` lies in the range the recurrence is stated for.
    pub fn applies(self, n: u64, c: u64) -> bool {
        match self {
            Recurrence::QPascal => n >= c && c >= 1,
            Recurrence::QComplement => n >= c,
            Recurrence::SZeroColumn => c == 0 && n >= 1,
            Recurrence::SPascal | Recurrence::SComplement => n > c && c >= 1,
        }
    }

    /// Right-hand side of the recurrence, read off `prev(n, c)`.
    pub fn predict(self, n: u64, c: u64, prev: impl Fn(u64, u64) -> BigInt) -> BigInt {
        let sign = |e: u64| {
            if e.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        };
        match self {
            Recurrence::QPascal => prev(n, c - 1) + prev(n, c),
            Recurrence::QComplement => binomial(n + 1, c as i64) - prev(n, c + 1) + prev(n, c),
            Recurrence::SZeroColumn => prev(n, 1) - prev(n, 0) + sign(n + 1),
            Recurrence::SPascal => prev(n, c - 1) - prev(n, c),
            Recurrence::SComplement => {
                // n > c, so n - c + 1 does not underflow.
                sign(n - c + 1) * binomial(n + 1, c as i64) - prev(n, c + 1) - prev(n, c)
            }
        }
    }

    /// Checks the recurrence against the direct definition at one point.
    /// Returns `None` outside the stated range.
    pub fn check(self, n: u64, c: u64) -> Option<RecurrenceCheck> {
        if !self.applies(n, c) {
            return None;
        }
        let kind = self.kind();
        let predicted = self.predict(n, c, |a, b| kind.definition(a, b));
        let actual = kind.definition(n + 1, c);
        Some(RecurrenceCheck {
            recurrence: self,
            n,
            c,
            predicted,
            actual,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub recurrence: Recurrence,
    pub n: u64,
    pub c: u64,
    pub predicted: BigInt,
    pub actual: BigInt,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.predicted == self.actual
    }
}

/// Rows beyond this index are filled by recurrence without the
/// definition cross-check.
pub const CROSS_CHECK_ROWS: u64 = 20;

/// Triangular table of `q(n, c)` or `s(n, c)` for `0 ≤ c ≤ n ≤ n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    kind: CoeffKind,
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn n_max(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry `(n, c)`; zero for `c > n` within the table, `None` past `n_max`.
    pub fn get(&self, n: u64, c: u64) -> Option<BigInt> {
        let row = self.rows.get(n as usize)?;
        Some(row.get(c as usize).cloned().unwrap_or_else(BigInt::zero))
    }
}

/// Fills the table row by row. Recurrences are used only inside their stated
/// ranges; every other entry comes from the definition.
pub fn build_coeff_table(kind: CoeffKind, n_max: u64) -> Result<CoeffTable, SequenceError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max as usize + 1);
    rows.push(vec![kind.definition(0, 0)]);
    let (pascal, column_zero) = match kind {
        CoeffKind::Q => (Recurrence::QPascal, Some(Recurrence::QComplement)),
        // The printed zero-column rule for s disagrees with the definition,
        // so column 0 is always taken from the definition.
        CoeffKind::S => (Recurrence::SPascal, None),
    };
    for n in 0..n_max {
        let prev = &rows[n as usize];
        let at = |a: u64, b: u64| -> BigInt {
            debug_assert_eq!(a, n);
            prev.get(b as usize).cloned().unwrap_or_else(BigInt::zero)
        };
        let mut row = Vec::with_capacity(n as usize + 2);
        for c in 0..=n + 1 {
            let rule = match (c, column_zero) {
                (0, Some(r)) if r.applies(n, 0) => Some(r),
                (0, _) => None,
                _ if pascal.applies(n, c) => Some(pascal),
                _ => None,
            };
            let value = match rule {
                Some(r) => {
                    let v = r.predict(n, c, at);
                    if n < CROSS_CHECK_ROWS {
                        let definition = kind.definition(n + 1, c);
                        if definition != v {
                            return Err(SequenceError::RecurrenceMismatch {
                                kind,
                                n: n + 1,
                                c,
                                recurrence: v,
                                definition,
                            });
                        }
                    }
                    v
                }
                None => kind.definition(n + 1, c),
            };
            row.push(value);
        }
        rows.push(row);
    }
    Ok(CoeffTable { kind, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Independent oracle: plain recurrence iteration.
    fn fib_lucas_naive(n: u64) -> (BigInt, BigInt) {
        let (mut f0, mut f1) = (BigInt::zero(), BigInt::one());
        let (mut l0, mut l1) = (BigInt::from(2), BigInt::one());
        for _ in 0..n {
            let f2 = &f0 + &f1;
            f0 = core::mem::replace(&mut f1, f2);
            let l2 = &l0 + &l1;
            l0 = core::mem::replace(&mut l1, l2);
        }
        (f0, l0)
    }

    #[test]
    fn fibonacci_spot_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(20), BigInt::from(6765));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(1), BigInt::one());
        assert_eq!(lucas(10), BigInt::from(123));
    }

    #[test]
    fn fast_doubling_matches_iteration() {
        for n in 0..=500 {
            assert_eq!(fib_lucas(n), fib_lucas_naive(n), "n={n}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigInt::one());
            assert_eq!(binomial(n, -1), BigInt::zero());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        let tri = pascal_triangle(30);
        for n in 0..=30u64 {
            assert_eq!(binomial_row(n), tri[n as usize]);
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), tri[n as usize][k as usize]);
            }
        }
    }

    #[test]
    fn q_and_s_spot_values() {
        assert_eq!(q_coeff(1, 0), BigInt::from(2));
        assert_eq!(q_coeff(1, 1), BigInt::from(1));
        assert_eq!(q_coeff(2, 1), BigInt::from(3));
        assert_eq!(q_coeff(2, 1), q_coeff(1, 0) + q_coeff(1, 1));
        assert_eq!(s_coeff(1, 0), BigInt::from(-2));
        assert_eq!(s_coeff(1, 1), BigInt::from(1));
        assert_eq!(s_coeff(2, 1), BigInt::from(-3));
        assert_eq!(s_coeff(2, 1), s_coeff(1, 0) - s_coeff(1, 1));
        assert_eq!(s_coeff(0, 0), BigInt::one());
    }

    #[test]
    fn tables() {
        let q2 = build_coeff_table(CoeffKind::Q, 2).unwrap();
        assert_eq!(q2.rows(), &[big(&[1]), big(&[2, 1]), big(&[2, 3, 1])]);
        let q0 = build_coeff_table(CoeffKind::Q, 0).unwrap();
        assert_eq!(q0.rows(), &[big(&[1])]);
        let s1 = build_coeff_table(CoeffKind::S, 1).unwrap();
        assert_eq!(s1.rows(), &[big(&[1]), big(&[-2, 1])]);
    }

    #[test]
    fn tables_match_definition() {
        for kind in [CoeffKind::Q, CoeffKind::S] {
            let t = build_coeff_table(kind, 40).unwrap();
            for n in 0..=40 {
                for c in 0..=n + 2 {
                    assert_eq!(
                        t.get(n, c).unwrap(),
                        kind.definition(n, c),
                        "{kind:?}({n},{c})"
                    );
                }
            }
            assert_eq!(t.get(41, 0), None);
        }
    }

    #[test]
    fn stated_recurrences_hold_except_zero_column() {
        for r in Recurrence::ALL {
            for n in 0..=20 {
                for c in 0..=n + 1 {
                    if let Some(check) = r.check(n, c) {
                        if r == Recurrence::SZeroColumn {
                            continue;
                        }
                        assert!(check.holds(), "{check:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn printed_zero_column_rule_disagrees_with_definition() {
        // s(2,0) = 2, but s(1,1) - s(1,0) + 1 = 4.
        let check = Recurrence::SZeroColumn.check(1, 0).unwrap();
        assert_eq!(check.actual, BigInt::from(2));
        assert_eq!(check.predicted, BigInt::from(4));
        // Negating the s(n,1) term recovers the definition.
        for n in 0..=20u64 {
            let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
            let fixed = -s_coeff(n, 1) - s_coeff(n, 0) + BigInt::from(sign);
            assert_eq!(fixed, s_coeff(n + 1, 0));
        }
    }

    #[test]
    fn recurrence_ranges() {
        assert!(Recurrence::QPascal.check(3, 0).is_none());
        assert!(Recurrence::SPascal.check(2, 2).is_none());
        assert!(Recurrence::QComplement.check(0, 0).is_some());
    }
}
