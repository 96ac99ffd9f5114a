use std::collections::BTreeMap;

use crate::scalar::{pow_by_squaring, Coeff};

/// Laurent polynomial in one variable `t`: negative exponents are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<C> {
    coeffs: BTreeMap<i64, C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut u = Self::zero();
        for (k, c) in terms {
            u.add_term(k, c);
        }
        u
    }

    pub(crate) fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(k, sum);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms by increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> Option<&C> {
        self.coeffs.get(&k)
    }

    /// Smallest exponent and its coefficient (behaviour as `t -> 0+`).
    pub fn lowest(&self) -> Option<(i64, &C)> {
        self.terms().next()
    }

    /// Largest exponent and its coefficient (behaviour as `t -> +inf`).
    pub fn highest(&self) -> Option<(i64, &C)> {
        self.terms().next_back()
    }

    /// Value at `t`; `t` must be nonzero if negative exponents occur.
    pub fn eval(&self, t: &C) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, (&k, c)| {
            let p = pow_by_squaring(t, k.unsigned_abs() as u32);
            acc + if k >= 0 { c.clone() * p } else { c.clone() / p }
        })
    }
}
