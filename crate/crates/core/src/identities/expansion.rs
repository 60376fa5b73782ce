use crate::error::IdentityError;
use crate::ring::GoldenInt;
use crate::scalar::Scalar;
use crate::sequences::{build_coeff_table, CoeffKind};

/// `+1` pairs with the `q` coefficients, `-1` with `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shift {
    Plus,
    Minus,
}

/// Evaluates `g(n) = Σ_j (a+shift)^(n-j) (b+shift)^j` directly and as
/// `Σ_{c=1..n} t(n,c)(a^c + b^c) + t(n,0)`. Requires `a*b = -1`.
pub fn cross_power_expansion_of<T: Scalar>(
    n: u64,
    a: &T,
    b: &T,
    shift: Shift,
) -> Result<(T, T), IdentityError> {
    if a.clone() * b.clone() != -T::one() {
        return Err(IdentityError::Precondition("a*b must equal -1"));
    }
    let (kind, s) = match shift {
        Shift::Plus => (CoeffKind::Q, T::one()),
        Shift::Minus => (CoeffKind::S, -T::one()),
    };
    let (a1, b1) = (a.clone() + s.clone(), b.clone() + s);
    let n_us = n as usize;
    let direct = (0..=n_us).fold(T::zero(), |acc, j| {
        acc + num_traits::pow(a1.clone(), n_us - j) * num_traits::pow(b1.clone(), j)
    });

    let table = build_coeff_table(kind, n).expect("q/s recurrences agree with their definitions");
    let t = |c: u64| T::from_integer(table.get(n, c).unwrap_or_default());
    let mut expanded = t(0);
    let (mut ac, mut bc) = (a.clone(), b.clone());
    for c in 1..=n {
        expanded = expanded + t(c) * (ac.clone() + bc.clone());
        ac = ac * a.clone();
        bc = bc * b.clone();
    }
    Ok((direct, expanded))
}

/// Golden-ring form: `b = -a^{-1}`, which exists only for units.
pub fn cross_power_expansion(
    n: u64,
    a: &GoldenInt,
    shift: Shift,
) -> Result<(GoldenInt, GoldenInt), IdentityError> {
    let b = -a.unit_inverse().ok_or(IdentityError::Precondition(
        "a must be a unit so that a*b = -1",
    ))?;
    cross_power_expansion_of(n, a, &b, shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn small_cases() {
        let phi = GoldenInt::phi();
        let (d, e) = cross_power_expansion(0, &phi, Shift::Plus).unwrap();
        assert_eq!((d.clone(), e), (GoldenInt::one(), GoldenInt::one()));
        let (d, e) = cross_power_expansion(1, &phi, Shift::Plus).unwrap();
        assert_eq!(d, GoldenInt::from_integer(3));
        assert_eq!(e, d);
        let (d, e) = cross_power_expansion(1, &phi, Shift::Minus).unwrap();
        assert_eq!(d, GoldenInt::from_integer(-1));
        assert_eq!(e, d);
    }

    #[test]
    fn rational_pair() {
        let a = BigRational::from_integer(BigInt::from(3));
        let b = BigRational::new(BigInt::from(-1), BigInt::from(3));
        for n in 0..8 {
            let (d, e) = cross_power_expansion_of(n, &a, &b, Shift::Minus).unwrap();
            assert_eq!(d, e);
        }
    }

    #[test]
    fn rejects_non_units() {
        assert!(matches!(
            cross_power_expansion(2, &GoldenInt::sqrt5(), Shift::Plus),
            Err(IdentityError::Precondition(_))
        ));
        let two = BigInt::from(2);
        assert!(cross_power_expansion_of(2, &two, &two, Shift::Plus).is_err());
    }
}
