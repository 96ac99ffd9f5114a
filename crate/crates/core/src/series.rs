//! Truncated power series in one indeterminate `H`.
//!
//! Coefficients of `H^0..=H^N` are stored densely; products and reciprocals
//! never look past `N`.

use num::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Coeff;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(vec![C::one()], order)
    }

    /// `c + u H`.
    pub fn affine(c: C, u: C, order: usize) -> Self {
        Self::from_coeffs(vec![c, u], order)
    }

    /// `u H^k`.
    pub fn monomial(u: C, k: usize, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        if k <= order {
            coeffs[k] = u;
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Result<C> {
        self.coeffs
            .get(k)
            .cloned()
            .ok_or(Error::IndexOutOfRange { index: k, order: self.order() })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn scale(&self, k: &C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * k.clone()).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, j| acc + self.coeffs[j].clone() * other.coeffs[k - j].clone())
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `b` with `a·b = 1` up to the order: `b_0 = 1/a_0`,
    /// `b_k = -(1/a_0) Σ_{j=1..k} a_j b_{k-j}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv = C::one() / a0.clone();
        let mut b: Vec<C> = Vec::with_capacity(self.coeffs.len());
        b.push(inv.clone());
        for k in 1..self.coeffs.len() {
            let s = (1..=k).fold(C::zero(), |acc, j| acc + self.coeffs[j].clone() * b[k - j].clone());
            b.push(-(inv.clone() * s));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `(1 + u H)^exponent` by the binomial theorem.
    pub fn binom_power(u: &C, exponent: u32, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        // binom(e, k) u^k, built incrementally as integers then cast through C
        let mut binom = BigInt::from(1);
        let mut upow = C::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k as u64 > u64::from(exponent) {
                break;
            }
            *slot = big_to_coeff::<C>(&binom) * upow.clone();
            binom = binom * BigInt::from(u64::from(exponent) - k as u64) / BigInt::from(k as u64 + 1);
            upow = upow * u.clone();
        }
        TruncatedSeries { coeffs }
    }
}

/// Embed an integer into the ring by binary expansion (only uses 0, 1, +).
fn big_to_coeff<C: Coeff>(n: &BigInt) -> C {
    let (sign, bits) = (n.sign(), n.magnitude());
    let mut acc = C::zero();
    for i in (0..bits.bits()).rev() {
        acc = acc.clone() + acc;
        if bits.bit(i) {
            acc = acc + C::one();
        }
    }
    if sign == num::bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}
