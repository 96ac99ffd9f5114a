//! Scalar abstractions.
//!
//! [`Coeff`] is the coefficient ring of the symbolic layer (exact rationals in
//! practice, but any `Num` works for arithmetic and evaluation). [`Real`] is
//! the floating-point type of the estimator.

use std::fmt;
use std::iter::Sum;
use std::ops::Neg;

use num::{BigInt, BigRational, Num, One, Signed, ToPrimitive, Zero};

/// Coefficient ring of [`crate::MultiPoly`] and friends.
pub trait Coeff: Num + Clone + PartialEq + Neg<Output = Self> + fmt::Debug + Send + Sync {}

impl<T> Coeff for T where T: Num + Clone + PartialEq + Neg<Output = T> + fmt::Debug + Send + Sync {}

/// Floating-point scalar of the estimator (`f32` or `f64`).
pub trait Real:
    num::Float + num::FromPrimitive + Sum + fmt::Debug + fmt::Display + Default + Send + Sync
{
    fn lit(x: f64) -> Self {
        <Self as num::FromPrimitive>::from_f64(x).expect("f64 literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Round an exact coefficient once into a float.
pub fn to_real<C: ToPrimitive, F: Real>(c: &C) -> F {
    F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
}

/// `base^exp` by repeated squaring. Both evaluation paths use this so the
/// float result is reproducible term by term.
pub fn pow_by_squaring<T>(base: &T, mut exp: u32) -> T
where
    T: Clone + One + std::ops::Mul<Output = T>,
{
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"p"` or `"p/q"` with optional leading sign.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Integer value of a rational, if it has denominator one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.denom().is_one().then(|| q.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squaring_matches_naive_power() {
        for e in 0..20u32 {
            let naive: i64 = (0..e).fold(1, |acc, _| acc * 3);
            assert_eq!(pow_by_squaring(&3i64, e), naive);
        }
    }

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(rational_string(&q), "-3/2");
        assert_eq!(parse_rational("10/4"), Some(rat(5, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("-7"), Some(rat_int(-7)));
    }
}
