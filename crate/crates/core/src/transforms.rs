//! Binomial transform, its inverse, the backward difference, and the
//! weighted-sum identities built on them.
//!
//! Every operation has a generic slice form over [`Scalar`] and a [`Seq`]
//! form that dispatches on the sequence's domain.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::TransformError;
use crate::ring::GoldenInt;
use crate::scalar::{Domain, ExactScalar, Scalar};
use crate::sequences::{binomial, binomial_row, pascal_triangle};

/// A finite, non-empty sequence `a_0..=a_n` whose elements share one domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Seq {
    Integer(Vec<BigInt>),
    Rational(Vec<BigRational>),
    Golden(Vec<GoldenInt>),
}

macro_rules! with_values {
    ($seq:expr, $v:ident => $body:expr) => {
        match $seq {
            Seq::Integer($v) => $body,
            Seq::Rational($v) => $body,
            Seq::Golden($v) => $body,
        }
    };
}

impl Seq {
    pub fn from_integers<I, T>(values: I) -> Result<Seq, TransformError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let v: Vec<BigInt> = values.into_iter().map(Into::into).collect();
        if v.is_empty() {
            return Err(TransformError::Empty);
        }
        Ok(Seq::Integer(v))
    }

    /// Promotes every value to the highest domain present.
    pub fn from_scalars(values: &[ExactScalar]) -> Result<Seq, TransformError> {
        if values.is_empty() {
            return Err(TransformError::Empty);
        }
        let target = values
            .iter()
            .map(ExactScalar::domain)
            .max()
            .unwrap_or(Domain::Integer);
        let promoted = values
            .iter()
            .map(|x| x.promote(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(match target {
            Domain::Integer => Seq::Integer(
                promoted
                    .into_iter()
                    .map(|x| x.as_integer().cloned().unwrap())
                    .collect(),
            ),
            Domain::Rational => Seq::Rational(
                promoted
                    .into_iter()
                    .map(|x| x.as_rational().cloned().unwrap())
                    .collect(),
            ),
            Domain::Golden => Seq::Golden(
                promoted
                    .into_iter()
                    .map(|x| x.as_golden().cloned().unwrap())
                    .collect(),
            ),
        })
    }

    pub fn len(&self) -> usize {
        with_values!(self, v => v.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn domain(&self) -> Domain {
        match self {
            Seq::Integer(_) => Domain::Integer,
            Seq::Rational(_) => Domain::Rational,
            Seq::Golden(_) => Domain::Golden,
        }
    }

    pub fn get(&self, i: usize) -> Option<ExactScalar> {
        with_values!(self, v => v.get(i).cloned().map(Scalar::into_exact))
    }

    pub fn values(&self) -> Vec<ExactScalar> {
        with_values!(self, v => v.iter().cloned().map(Scalar::into_exact).collect())
    }

    pub fn promote(&self, target: Domain) -> Result<Seq, TransformError> {
        if target == self.domain() {
            return Ok(self.clone());
        }
        let promoted = self
            .values()
            .iter()
            .map(|x| x.promote(target))
            .collect::<Result<Vec<_>, _>>()?;
        Seq::from_scalars(&promoted)
    }
}

fn check_index(len: usize, m: usize, n: usize) -> Result<(), TransformError> {
    if n >= len || m > n {
        Err(TransformError::Index { m, n, len })
    } else {
        Ok(())
    }
}

fn alternate<T: Scalar>(x: T, odd: bool) -> T {
    if odd {
        -x
    } else {
        x
    }
}

// Generic slice forms.

/// `b_n = Σ_k C(n,k) a_k`.
pub fn binomial_transform_of<T: Scalar>(a: &[T]) -> Vec<T> {
    let rows = pascal_triangle(a.len().saturating_sub(1));
    (0..a.len())
        .map(|n| {
            rows[n]
                .iter()
                .zip(a)
                .fold(T::zero(), |acc, (c, x)| acc + x.scale(c))
        })
        .collect()
}

/// `a_n = Σ_k C(n,k) (-1)^(n-k) b_k`.
pub fn inverse_transform_of<T: Scalar>(b: &[T]) -> Vec<T> {
    let rows = pascal_triangle(b.len().saturating_sub(1));
    (0..b.len())
        .map(|n| {
            rows[n]
                .iter()
                .zip(b)
                .enumerate()
                .fold(T::zero(), |acc, (k, (c, x))| {
                    acc + alternate(x.scale(c), (n - k) % 2 == 1)
                })
        })
        .collect()
}

/// `m`-fold backward difference at `n`, by repeated differencing.
pub fn nabla_direct_of<T: Scalar>(b: &[T], m: usize, n: usize) -> Result<T, TransformError> {
    check_index(b.len(), m, n)?;
    let mut window: Vec<T> = b[n - m..=n].to_vec();
    for _ in 0..m {
        window = window
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
    }
    Ok(window.pop().expect("window keeps one element"))
}

/// `∇^m b_n = Σ_k C(m,k) (-1)^k b_{n-k}`.
pub fn nabla_sum_of<T: Scalar>(b: &[T], m: usize, n: usize) -> Result<T, TransformError> {
    check_index(b.len(), m, n)?;
    Ok(binomial_row(m as u64)
        .iter()
        .enumerate()
        .fold(T::zero(), |acc, (k, c)| {
            acc + alternate(b[n - k].scale(c), k % 2 == 1)
        }))
}

/// `C(n,m) ∇^m b_n` as `Σ_j C(n,j) C(j,n-m) (-1)^(n-j) b_j`.
pub fn nabla_weighted_of<T: Scalar>(b: &[T], m: usize, n: usize) -> Result<T, TransformError> {
    check_index(b.len(), m, n)?;
    let row = binomial_row(n as u64);
    Ok((0..=n).fold(T::zero(), |acc, j| {
        let w = &row[j] * binomial(j as u64, (n - m) as i64);
        acc + alternate(b[j].scale(&w), (n - j) % 2 == 1)
    }))
}

/// `Σ_k C(n-m, k-m) a_k`.
pub fn lemma2_lhs_of<T: Scalar>(a: &[T], m: usize, n: usize) -> Result<T, TransformError> {
    check_index(a.len(), m, n)?;
    let row = binomial_row((n - m) as u64);
    Ok((m..=n).fold(T::zero(), |acc, k| acc + a[k].scale(&row[k - m])))
}

/// `Σ_k C(n,k) C(k,m) a_k`.
pub fn lemma2_weighted_lhs_of<T: Scalar>(a: &[T], m: usize, n: usize) -> Result<T, TransformError> {
    check_index(a.len(), m, n)?;
    let row = binomial_row(n as u64);
    Ok((m..=n).fold(T::zero(), |acc, k| {
        acc + a[k].scale(&(&row[k] * binomial(k as u64, m as i64)))
    }))
}

/// `d_n = Σ_k C(n,k) (-1)^(n-k) c_k`, the alternating transform used as a weight.
pub fn signed_transform_of<T: Scalar>(c: &[T]) -> Vec<T> {
    // Same arithmetic as the inverse transform, kept under its own name.
    inverse_transform_of(c)
}

/// Three evaluations of `Σ C(n,k) a_k c_k`: directly, as
/// `Σ_m C(n,m) d_m ∇^m b_n`, and in the double-sum form
/// `Σ_k (-1)^k C(n,k) b_{n-k} Σ_l C(n-k,l) d_{l+k}`.
pub fn product_sum_of<T: Scalar>(a: &[T], c: &[T]) -> Result<(T, T, T), TransformError> {
    if a.len() != c.len() {
        return Err(TransformError::LengthMismatch(a.len(), c.len()));
    }
    if a.is_empty() {
        return Err(TransformError::Empty);
    }
    let n = a.len() - 1;
    let rows = pascal_triangle(n);
    let b = binomial_transform_of(a);
    let d = signed_transform_of(c);

    let lhs = (0..=n).fold(T::zero(), |acc, k| {
        acc + (a[k].clone() * c[k].clone()).scale(&rows[n][k])
    });
    let mut rhs8 = T::zero();
    for m in 0..=n {
        rhs8 = rhs8 + (d[m].clone() * nabla_sum_of(&b, m, n)?).scale(&rows[n][m]);
    }
    let rhs81 = (0..=n).fold(T::zero(), |acc, k| {
        let inner = (0..=n - k).fold(T::zero(), |s, l| s + d[l + k].scale(&rows[n - k][l]));
        acc + alternate((b[n - k].clone() * inner).scale(&rows[n][k]), k % 2 == 1)
    });
    Ok((lhs, rhs8, rhs81))
}

/// `Σ C(n,k) e_k x^k` against `Σ_j C(n,j) f_j x^j (1-x)^(n-j)` with
/// `f_j = Σ_{k≤j} C(j,k) e_k`.
pub fn corollary1_of<T: Scalar>(e: &[T], x: &T) -> Result<(T, T), TransformError> {
    let n = e.len().checked_sub(1).ok_or(TransformError::Empty)?;
    let rows = pascal_triangle(n);
    let f = binomial_transform_of(e);
    let one_minus_x = T::one() - x.clone();
    let lhs = (0..=n).fold(T::zero(), |acc, k| {
        acc + (e[k].clone() * num_traits::pow(x.clone(), k)).scale(&rows[n][k])
    });
    let rhs = (0..=n).fold(T::zero(), |acc, j| {
        let w = num_traits::pow(x.clone(), j) * num_traits::pow(one_minus_x.clone(), n - j);
        acc + (f[j].clone() * w).scale(&rows[n][j])
    });
    Ok((lhs, rhs))
}

/// `Σ C(n,k) a_k x^k` against `Σ_m C(n,m) ∇^m b_n (x-1)^m`.
pub fn corollary2_of<T: Scalar>(a: &[T], x: &T) -> Result<(T, T), TransformError> {
    let n = a.len().checked_sub(1).ok_or(TransformError::Empty)?;
    let row = binomial_row(n as u64);
    let b = binomial_transform_of(a);
    let x_minus_one = x.clone() - T::one();
    let lhs = (0..=n).fold(T::zero(), |acc, k| {
        acc + (a[k].clone() * num_traits::pow(x.clone(), k)).scale(&row[k])
    });
    let mut rhs = T::zero();
    for (m, weight) in row.iter().enumerate() {
        let w = nabla_sum_of(&b, m, n)? * num_traits::pow(x_minus_one.clone(), m);
        rhs = rhs + w.scale(weight);
    }
    Ok((lhs, rhs))
}

// Seq forms.

pub fn binomial_transform(a: &Seq) -> Seq {
    with_values!(a, v => Scalar::into_seq(binomial_transform_of(v)))
}

pub fn inverse_transform(b: &Seq) -> Seq {
    with_values!(b, v => Scalar::into_seq(inverse_transform_of(v)))
}

pub fn nabla_direct(b: &Seq, m: usize, n: usize) -> Result<ExactScalar, TransformError> {
    with_values!(b, v => nabla_direct_of(v, m, n).map(Scalar::into_exact))
}

pub fn nabla_sum(b: &Seq, m: usize, n: usize) -> Result<ExactScalar, TransformError> {
    with_values!(b, v => nabla_sum_of(v, m, n).map(Scalar::into_exact))
}

pub fn nabla_weighted(b: &Seq, m: usize, n: usize) -> Result<ExactScalar, TransformError> {
    with_values!(b, v => nabla_weighted_of(v, m, n).map(Scalar::into_exact))
}

pub fn lemma2_lhs(a: &Seq, m: usize, n: usize) -> Result<ExactScalar, TransformError> {
    with_values!(a, v => lemma2_lhs_of(v, m, n).map(Scalar::into_exact))
}

pub fn lemma2_weighted_lhs(a: &Seq, m: usize, n: usize) -> Result<ExactScalar, TransformError> {
    with_values!(a, v => lemma2_weighted_lhs_of(v, m, n).map(Scalar::into_exact))
}

/// Exact `Σ_{k=m..n} C(n,k) C(k,m) (-1)^k / k`.
pub fn lemma3_sum(n: u64, m: u64) -> Result<ExactScalar, TransformError> {
    if m < 1 {
        return Err(TransformError::Domain("lemma3_sum requires m >= 1"));
    }
    if m > n {
        return Err(TransformError::Index {
            m: m as usize,
            n: n as usize,
            len: n as usize + 1,
        });
    }
    let row = binomial_row(n);
    let sum = (m..=n).fold(BigRational::zero(), |acc, k| {
        let w = &row[k as usize] * binomial(k, m as i64);
        let sign = if k % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        acc + BigRational::new(w * sign, BigInt::from(k))
    });
    Ok(ExactScalar::Rational(sum))
}

pub fn theorem1_eval(
    a: &Seq,
    c: &Seq,
) -> Result<(ExactScalar, ExactScalar, ExactScalar), TransformError> {
    if a.len() != c.len() {
        return Err(TransformError::LengthMismatch(a.len(), c.len()));
    }
    let target = a.domain().max(c.domain());
    let (a, c) = (a.promote(target)?, c.promote(target)?);
    fn wrap<T: Scalar>((x, y, z): (T, T, T)) -> (ExactScalar, ExactScalar, ExactScalar) {
        (x.into_exact(), y.into_exact(), z.into_exact())
    }
    match (&a, &c) {
        (Seq::Integer(x), Seq::Integer(y)) => product_sum_of(x, y).map(wrap),
        (Seq::Rational(x), Seq::Rational(y)) => product_sum_of(x, y).map(wrap),
        (Seq::Golden(x), Seq::Golden(y)) => product_sum_of(x, y).map(wrap),
        _ => unreachable!("sequences promoted to one domain"),
    }
}

fn with_point<R>(
    s: &Seq,
    x: &ExactScalar,
    f_int: impl FnOnce(&[BigInt], &BigInt) -> Result<R, TransformError>,
    f_rat: impl FnOnce(&[BigRational], &BigRational) -> Result<R, TransformError>,
    f_gold: impl FnOnce(&[GoldenInt], &GoldenInt) -> Result<R, TransformError>,
) -> Result<R, TransformError> {
    let target = s.domain().max(x.domain());
    let s = s.promote(target)?;
    let x = x.promote(target)?;
    match (&s, &x) {
        (Seq::Integer(v), ExactScalar::Integer(p)) => f_int(v, p),
        (Seq::Rational(v), ExactScalar::Rational(p)) => f_rat(v, p),
        (Seq::Golden(v), ExactScalar::Golden(p)) => f_gold(v, p),
        _ => unreachable!("sequence and point promoted to one domain"),
    }
}

pub fn corollary1_eval(
    e: &Seq,
    x: &ExactScalar,
) -> Result<(ExactScalar, ExactScalar), TransformError> {
    fn wrap<T: Scalar>((l, r): (T, T)) -> (ExactScalar, ExactScalar) {
        (l.into_exact(), r.into_exact())
    }
    with_point(
        e,
        x,
        |v, p| corollary1_of(v, p).map(wrap),
        |v, p| corollary1_of(v, p).map(wrap),
        |v, p| corollary1_of(v, p).map(wrap),
    )
}

pub fn corollary2_eval(
    a: &Seq,
    x: &ExactScalar,
) -> Result<(ExactScalar, ExactScalar), TransformError> {
    fn wrap<T: Scalar>((l, r): (T, T)) -> (ExactScalar, ExactScalar) {
        (l.into_exact(), r.into_exact())
    }
    with_point(
        a,
        x,
        |v, p| corollary2_of(v, p).map(wrap),
        |v, p| corollary2_of(v, p).map(wrap),
        |v, p| corollary2_of(v, p).map(wrap),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Seq {
        Seq::from_integers(v.iter().copied()).unwrap()
    }

    fn int(x: i64) -> ExactScalar {
        ExactScalar::int(x)
    }

    #[test]
    fn transform_examples() {
        let b = binomial_transform(&ints(&[0, 1, 1, 2]));
        assert_eq!(b.get(3), Some(int(8)));
        assert_eq!(binomial_transform(&ints(&[0, 0, 0])), ints(&[0, 0, 0]));
        assert_eq!(
            binomial_transform(&ints(&[1, 0, 0, 0, 0])),
            ints(&[1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn inverse_examples() {
        let a = ints(&[0, 1, 1, 2]);
        assert_eq!(inverse_transform(&binomial_transform(&a)), a);
        assert_eq!(inverse_transform(&ints(&[1, 1, 1, 1])), ints(&[1, 0, 0, 0]));
        assert_eq!(inverse_transform(&ints(&[0, 0])), ints(&[0, 0]));
    }

    #[test]
    fn nabla_examples() {
        let lin = ints(&[0, 1, 2, 3, 4]);
        for n in 1..5 {
            assert_eq!(nabla_direct(&lin, 1, n).unwrap(), int(1));
            assert_eq!(nabla_sum(&lin, 1, n).unwrap(), int(1));
        }
        let pow2 = ints(&[1, 2, 4, 8]);
        assert_eq!(nabla_direct(&pow2, 0, 2).unwrap(), int(4));
        assert_eq!(nabla_direct(&pow2, 2, 3).unwrap(), int(2));
        assert_eq!(nabla_sum(&pow2, 2, 3).unwrap(), int(2));
        assert_eq!(nabla_sum(&pow2, 0, 3).unwrap(), int(8));
    }

    #[test]
    fn nabla_index_errors() {
        let s = ints(&[1, 2, 3]);
        assert!(matches!(
            nabla_direct(&s, 0, 3),
            Err(TransformError::Index { .. })
        ));
        assert!(matches!(
            nabla_sum(&s, 2, 1),
            Err(TransformError::Index { .. })
        ));
    }

    #[test]
    fn lemma2_examples() {
        let a = ints(&[0, 1, 1, 2]);
        let b = binomial_transform(&a);
        assert_eq!(lemma2_lhs(&a, 0, 3).unwrap(), b.get(3).unwrap());
        assert_eq!(lemma2_lhs(&a, 3, 3).unwrap(), int(2));
        assert_eq!(lemma2_lhs(&a, 1, 3).unwrap(), int(5));
        assert_eq!(nabla_sum(&b, 1, 3).unwrap(), int(5));
    }

    #[test]
    fn lemma3_examples() {
        assert_eq!(lemma3_sum(2, 1).unwrap(), int(-1));
        assert_eq!(lemma3_sum(3, 2).unwrap(), ExactScalar::ratio(1, 2).unwrap());
        for n in 1..8 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                lemma3_sum(n, n).unwrap(),
                ExactScalar::ratio(sign, n as i64).unwrap()
            );
        }
        assert!(matches!(lemma3_sum(3, 0), Err(TransformError::Domain(_))));
    }

    #[test]
    fn theorem1_examples() {
        let a = ints(&[0, 1, 1, 2]);
        let (lhs, r8, r81) = theorem1_eval(&a, &ints(&[1, 1, 1, 1])).unwrap();
        assert_eq!(lhs, binomial_transform(&a).get(3).unwrap());
        assert_eq!(lhs, r8);
        assert_eq!(lhs, r81);

        let (lhs, r8, r81) = theorem1_eval(&a, &a).unwrap();
        assert_eq!(lhs, int(10));
        assert_eq!(r8, int(10));
        assert_eq!(r81, int(10));

        assert!(matches!(
            theorem1_eval(&a, &ints(&[1, 2])),
            Err(TransformError::LengthMismatch(4, 2))
        ));
    }

    #[test]
    fn corollary1_examples() {
        let e = ints(&[1, 2, 3]);
        let (l, r) = corollary1_eval(&e, &int(0)).unwrap();
        assert_eq!((l.clone(), r), (int(1), int(1)));
        let (l, r) = corollary1_eval(&e, &int(1)).unwrap();
        assert_eq!(l, int(8));
        assert_eq!(r, int(8));
        let (l, r) = corollary1_eval(&e, &ExactScalar::ratio(1, 2).unwrap()).unwrap();
        assert_eq!(l, ExactScalar::ratio(15, 4).unwrap());
        assert_eq!(r, l);
    }

    #[test]
    fn corollary2_examples() {
        let a = ints(&[0, 1, 1, 2]);
        let (l, r) = corollary2_eval(&a, &int(1)).unwrap();
        assert_eq!(l, int(8));
        assert_eq!(r, int(8));
        let (l, r) = corollary2_eval(&a, &int(2)).unwrap();
        assert_eq!(l, int(34));
        assert_eq!(r, int(34));
        let (l, r) = corollary2_eval(&a, &ExactScalar::Golden(GoldenInt::phi().pow(2))).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.domain(), Domain::Golden);
    }

    #[test]
    fn rational_sequence_with_golden_point_is_rejected() {
        let e = Seq::from_scalars(&[ExactScalar::ratio(1, 3).unwrap()]).unwrap();
        let phi = ExactScalar::Golden(GoldenInt::phi());
        assert!(matches!(
            corollary2_eval(&e, &phi),
            Err(TransformError::Scalar(_))
        ));
    }

    #[test]
    fn seq_promotion() {
        let s = Seq::from_scalars(&[int(1), ExactScalar::ratio(1, 2).unwrap()]).unwrap();
        assert_eq!(s.domain(), Domain::Rational);
        let g = ints(&[1, 2]).promote(Domain::Golden).unwrap();
        assert_eq!(
            g,
            Seq::Golden(vec![GoldenInt::from_integer(1), GoldenInt::from_integer(2)])
        );
        assert!(matches!(Seq::from_scalars(&[]), Err(TransformError::Empty)));
    }
}
