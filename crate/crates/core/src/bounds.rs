//! Closed-form exponents and critical-point counts.
//!
//! Everything here is exact: counts and exponents are arbitrary-precision
//! integers, and the generating-function count goes through
//! [`TruncatedSeries`] over the rationals.

use num::{BigInt, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{as_integer, rat_int};
use crate::Series;

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `B(n)`, the largest binomial coefficient `binom(n, ⌊n/2⌋)`.
pub fn binom_max(n: u64) -> BigInt {
    binomial(n, n / 2)
}

fn check_nd(n: u64, d: u64, min_d: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::DomainError(format!("n must be >= 1, got {n}")));
    }
    if d < min_d {
        return Err(Error::DomainError(format!("d must be >= {min_d}, got {d}")));
    }
    Ok(())
}

fn pow(base: u64, exp: u64) -> BigInt {
    num::pow(BigInt::from(base), exp as usize)
}

/// Exponent `B(n-1) d^n` valid for any max-system of degree `<= d` in `n`
/// variables with an isolated zero (and its negative at infinity).
pub fn loja_bound(n: u64, d: u64) -> Result<BigInt> {
    check_nd(n, d, 1)?;
    Ok(binom_max(n - 1) * pow(d, n))
}

/// `(d-1)^n + 1`, the known exponent for a single polynomial with a strict
/// local minimum.
pub fn gwozdziewicz_bound(n: u64, d: u64) -> Result<BigInt> {
    check_nd(n, d, 1)?;
    Ok(pow(d - 1, n) + 1)
}

/// `(d^n, 2 d^n)`: the exponents of the worst-case system and of its sum of
/// squares.
pub fn worst_case_exponents(n: u64, d: u64) -> Result<(BigInt, BigInt)> {
    check_nd(n, d, 2)?;
    let e = pow(d, n);
    Ok((e.clone(), e * 2))
}

/// `binom(n-1, k-1) d^k (d-1)^{n-k}`: critical points of a general linear
/// function on a general complete intersection of `k` degree-`d` hypersurfaces
/// in affine `n`-space.
pub fn critical_count_closed(n: u64, k: u64, d: u64) -> Result<BigInt> {
    check_nd(n, d, 1)?;
    if k < 1 || k > n {
        return Err(Error::DomainError(format!("k must be in 1..={n}, got {k}")));
    }
    Ok(binomial(n - 1, k - 1) * pow(d, k) * pow(d - 1, n - k))
}

/// Coefficient of `H^n` in
/// `(-1)^{n-k} (1+H)^n / (1+cH) · Π d_i H / (1 + d_i H)`,
/// the critical-point count of a degree-`c` function on a complete
/// intersection of the given degrees. `degrees` may be empty.
pub fn critical_count_series(n: u64, degrees: &[u64], c: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::DomainError(format!("n must be >= 1, got {n}")));
    }
    let k = degrees.len() as u64;
    if k > n {
        return Err(Error::DomainError(format!("{k} hypersurfaces exceed dimension {n}")));
    }
    if c < 1 {
        return Err(Error::DomainError(format!("c must be >= 1, got {c}")));
    }
    if let Some(d) = degrees.iter().find(|&&d| d < 1) {
        return Err(Error::DomainError(format!("degrees must be >= 1, got {d}")));
    }
    let order = n as usize;
    let n32 = u32::try_from(n).map_err(|_| Error::DomainError("n too large".into()))?;
    let mut acc = Series::binom_power(&rat_int(1), n32, order)
        .mul(&Series::affine(rat_int(1), rat_int(c as i64), order).reciprocal()?)?;
    for &d in degrees {
        let di = rat_int(d as i64);
        let factor = Series::monomial(di.clone(), 1, order)
            .mul(&Series::affine(rat_int(1), di, order).reciprocal()?)?;
        acc = acc.mul(&factor)?;
    }
    let mut coeff = acc.coefficient(order)?;
    if (n - k) % 2 == 1 {
        coeff = -coeff;
    }
    let value = as_integer(&coeff).ok_or_else(|| Error::NonIntegralCount(coeff.to_string()))?;
    if value.is_negative() {
        return Err(Error::NegativeCount(value.to_string()));
    }
    Ok(value)
}

/// Every closed-form quantity for one `(n, d)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub d: u64,
    #[serde(serialize_with = "big_string")]
    pub binom_max: BigInt,
    #[serde(serialize_with = "big_string")]
    pub loja_bound: BigInt,
    #[serde(serialize_with = "big_string")]
    pub gwoz_bound: BigInt,
    #[serde(serialize_with = "big_string")]
    pub worst_case_exponent: BigInt,
    #[serde(serialize_with = "big_string")]
    pub sos_exponent: BigInt,
    /// `d^n`, the conjectured optimal exponent; reported, never asserted.
    #[serde(serialize_with = "big_string")]
    pub conjectured_exponent: BigInt,
}

impl BoundReport {
    pub fn new(n: u64, d: u64) -> Result<Self> {
        let loja = loja_bound(n, d)?;
        let gwoz = gwozdziewicz_bound(n, d)?;
        let dn = pow(d, n);
        Ok(BoundReport {
            n,
            d,
            binom_max: binom_max(n - 1),
            loja_bound: loja,
            gwoz_bound: gwoz,
            worst_case_exponent: dn.clone(),
            sos_exponent: dn.clone() * 2,
            conjectured_exponent: dn,
        })
    }
}

pub(crate) fn big_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binom_max_examples() {
        assert_eq!(binom_max(0), b(1));
        assert_eq!(binom_max(4), b(6));
        assert_eq!(binom_max(5), b(10));
    }

    #[test]
    fn binom_max_is_the_row_maximum() {
        for n in 0..=20u64 {
            let brute = (0..=n).map(|k| binomial(n, k)).max().unwrap();
            assert_eq!(binom_max(n), brute, "n = {n}");
        }
    }

    #[test]
    fn loja_bound_examples() {
        assert_eq!(loja_bound(2, 3).unwrap(), b(9));
        assert_eq!(loja_bound(3, 2).unwrap(), b(16));
        assert_eq!(loja_bound(4, 3).unwrap(), b(243));
        assert_eq!(loja_bound(2, 4).unwrap(), b(16));
        assert!(matches!(loja_bound(0, 2), Err(Error::DomainError(_))));
        assert!(matches!(loja_bound(2, 0), Err(Error::DomainError(_))));
    }

    #[test]
    fn gwoz_examples() {
        assert_eq!(gwozdziewicz_bound(2, 3).unwrap(), b(5));
        assert_eq!(gwozdziewicz_bound(3, 4).unwrap(), b(28));
        assert_eq!(gwozdziewicz_bound(5, 1).unwrap(), b(1));
        assert!(gwozdziewicz_bound(0, 1).is_err());
    }

    #[test]
    fn worst_case_examples() {
        assert_eq!(worst_case_exponents(2, 2).unwrap(), (b(4), b(8)));
        assert_eq!(worst_case_exponents(3, 2).unwrap(), (b(8), b(16)));
        assert_eq!(worst_case_exponents(1, 5).unwrap(), (b(5), b(10)));
        assert!(worst_case_exponents(2, 1).is_err());
    }

    #[test]
    fn closed_count_examples() {
        assert_eq!(critical_count_closed(2, 1, 3).unwrap(), b(6));
        assert_eq!(critical_count_closed(3, 2, 2).unwrap(), b(8));
        assert_eq!(critical_count_closed(1, 1, 7).unwrap(), b(7));
        assert!(critical_count_closed(3, 0, 2).is_err());
        assert!(critical_count_closed(3, 4, 2).is_err());
    }

    #[test]
    fn series_count_examples() {
        assert_eq!(critical_count_series(3, &[2], 1).unwrap(), critical_count_closed(3, 1, 2).unwrap());
        assert_eq!(critical_count_series(3, &[2], 1).unwrap(), b(2));
        // k = 0: Bezout count (c-1)^n of the gradient system
        assert_eq!(critical_count_series(2, &[], 3).unwrap(), b(4));
        for n in 1..=6u64 {
            for c in 1..=5u64 {
                assert_eq!(critical_count_series(n, &[], c).unwrap(), num::pow(b(c as i64 - 1), n as usize));
            }
        }
        // k = n: the finite intersection has Π d_i points
        assert_eq!(critical_count_series(2, &[2, 3], 5).unwrap(), b(6));
        assert_eq!(critical_count_series(3, &[2, 3, 4], 7).unwrap(), b(24));
    }

    #[test]
    fn series_count_domain_errors() {
        assert!(matches!(critical_count_series(0, &[], 1), Err(Error::DomainError(_))));
        assert!(matches!(critical_count_series(1, &[2, 2], 1), Err(Error::DomainError(_))));
        assert!(matches!(critical_count_series(2, &[0], 1), Err(Error::DomainError(_))));
        assert!(matches!(critical_count_series(2, &[2], 0), Err(Error::DomainError(_))));
    }

    #[test]
    fn series_matches_closed_form_on_grid() {
        for n in 1..=8u64 {
            for k in 1..=n {
                for d in 2..=6u64 {
                    let degrees = vec![d; k as usize];
                    assert_eq!(
                        critical_count_series(n, &degrees, 1).unwrap(),
                        critical_count_closed(n, k, d).unwrap(),
                        "n={n} k={k} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_and_single_polynomial_consistency() {
        for n in 1..=10u64 {
            for d in 1..=10u64 {
                let dn = pow(d, n);
                assert!(loja_bound(n, d).unwrap() >= dn);
            }
        }
        for n in 1..=6u64 {
            for d in 2..=6u64 {
                let (_, sos) = worst_case_exponents(n, d).unwrap();
                assert!(sos <= gwozdziewicz_bound(n, 2 * d).unwrap(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn report_fields() {
        let r = BoundReport::new(3, 2).unwrap();
        assert_eq!(r.loja_bound, b(16));
        assert_eq!(r.gwoz_bound, b(2));
        assert_eq!(r.worst_case_exponent, b(8));
        assert_eq!(r.sos_exponent, b(16));
        assert!(r.loja_bound >= r.worst_case_exponent);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["loja_bound"], "16");
    }
}
