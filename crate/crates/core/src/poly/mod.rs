//! Sparse multivariate polynomials.
//!
//! A [`MultiPoly`] is a map from exponent vectors to nonzero coefficients,
//! stored in a fixed graded order so printing and float evaluation are
//! reproducible. Variables are 0-indexed internally and printed as `x1, x2, …`.

mod curve;
mod system;
mod uni;

pub use curve::{MonomialCurve, Regime};
pub use system::{FloatSystem, MaxSystem};
pub use uni::UniPoly;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::scalar::{pow_by_squaring, to_real, Coeff, Real};

/// Exponent vector of a monomial, one entry per variable.
///
/// Ordered by total degree, then lexicographically with larger powers of
/// earlier variables first: `1 < x1 < x2 < x1^2 < x1*x2 < x2^2 < …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(nvars: usize) -> Self {
        ExpVec(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn padded(&self, nvars: usize) -> ExpVec {
        let mut e = self.0.clone();
        e.resize(nvars, 0);
        ExpVec(e)
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree, with a separate value for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Degree of the zero polynomial. Sorts below every finite degree.
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial in `nvars` variables over the coefficient ring `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<ExpVec, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, ExpVec::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x_{var+1}` (0-indexed argument).
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        Self::monomial(nvars, ExpVec::unit(nvars, var), C::one())
    }

    pub fn monomial(nvars: usize, exps: ExpVec, c: C) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Build from arbitrary terms; duplicates are summed and zeros dropped.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExpVec, C)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExpVec, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage (graded) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Option<&C> {
        self.terms.get(e)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |e| Degree::Finite(e.degree()))
    }

    /// Highest 0-indexed variable with a nonzero exponent.
    pub fn max_var_used(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|e| e.0.iter().rposition(|&x| x > 0))
            .max()
    }

    /// Same polynomial viewed in `nvars` variables. Shrinking is allowed only
    /// when the dropped variables do not occur.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if let Some(v) = self.max_var_used() {
            if v >= nvars {
                return Err(Error::VariableCountMismatch { left: self.nvars, right: nvars });
            }
        }
        Ok(MultiPoly {
            nvars,
            terms: self.terms.iter().map(|(e, c)| (e.padded(nvars), c.clone())).collect(),
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    fn check_point(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: len });
        }
        Ok(())
    }

    /// Exact evaluation.
    pub fn eval(&self, point: &[C]) -> Result<C> {
        self.check_point(point.len())?;
        Ok(self.terms.iter().fold(C::zero(), |acc, (e, c)| {
            acc + e.0.iter().zip(point).fold(c.clone(), |m, (&k, x)| {
                if k == 0 {
                    m
                } else {
                    m * pow_by_squaring(x, k)
                }
            })
        }))
    }

    /// Substitute `x_i = s_i t^{a_i}`, giving a Laurent polynomial in `t`.
    pub fn substitute_curve(&self, curve: &MonomialCurve<C>) -> Result<UniPoly<C>> {
        self.check_point(curve.nvars())?;
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut order: i64 = 0;
            for ((&k, a), s) in e.0.iter().zip(curve.exponents()).zip(curve.coeffs()) {
                if k == 0 {
                    continue;
                }
                coeff = coeff * pow_by_squaring(s, k);
                order = i64::from(k)
                    .checked_mul(*a)
                    .and_then(|x| order.checked_add(x))
                    .ok_or_else(|| Error::InvalidCurve("t-exponent overflows i64".into()))?;
            }
            out.add_term(order, coeff);
        }
        Ok(out)
    }
}

impl<C: Coeff + ToPrimitive> MultiPoly<C> {
    /// Float evaluation with coefficients rounded on the fly. Monomials are
    /// built by repeated squaring and accumulated in storage order.
    pub fn eval_float<F: Real>(&self, point: &[F]) -> Result<F> {
        self.check_point(point.len())?;
        Ok(FloatPoly::from_poly(self).eval_unchecked(point))
    }
}

/// A polynomial with coefficients rounded once to `F`, for repeated numeric
/// evaluation.
#[derive(Debug, Clone)]
pub struct FloatPoly<F> {
    nvars: usize,
    terms: Vec<(Vec<u32>, F)>,
}

impl<F: Real> FloatPoly<F> {
    pub fn from_poly<C: Coeff + ToPrimitive>(p: &MultiPoly<C>) -> Self {
        FloatPoly {
            nvars: p.nvars,
            terms: p.terms.iter().map(|(e, c)| (e.0.clone(), to_real(c))).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Caller guarantees `point.len() == nvars`.
    pub fn eval_unchecked(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut m = *c;
            for (&k, &x) in e.iter().zip(point) {
                if k != 0 {
                    m = m * pow_by_squaring(&x, k);
                }
            }
            acc = acc + m;
        }
        acc
    }
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    /// Panics on a variable count mismatch; see [`MultiPoly::add`].
    fn add(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::add(self, rhs).expect("operands share nvars")
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn sub(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::sub(self, rhs).expect("operands share nvars")
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn mul(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::mul(self, rhs).expect("operands share nvars")
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::Poly;
    use num::BigRational;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn c(n: usize, q: BigRational) -> Poly {
        Poly::constant(n, q)
    }

    fn term(exps: &[u32], q: BigRational) -> Poly {
        Poly::monomial(exps.len(), ExpVec::new(exps.to_vec()), q)
    }

    #[test]
    fn add_examples() {
        assert!((&x(1, 0) + &x(1, 0).negate()).is_zero());
        let p = &x(2, 0).pow(2) + &(&x(2, 0) - &x(2, 1).pow(2));
        let expected = Poly::from_terms(
            2,
            vec![
                (ExpVec::new(vec![2, 0]), rat_int(1)),
                (ExpVec::new(vec![1, 0]), rat_int(1)),
                (ExpVec::new(vec![0, 2]), rat_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
        let half = term(&[1], rat(1, 2));
        let third = term(&[1], rat(1, 3));
        assert_eq!(&half + &third, term(&[1], rat(5, 6)));
    }

    #[test]
    fn add_rejects_mismatched_nvars() {
        assert_eq!(
            x(1, 0).add(&x(2, 0)),
            Err(Error::VariableCountMismatch { left: 1, right: 2 })
        );
        assert!(x(1, 0).mul(&x(3, 2)).is_err());
    }

    #[test]
    fn mul_examples() {
        let a = &x(2, 0) - &x(2, 1).pow(2);
        let b = &x(2, 0) + &x(2, 1).pow(2);
        assert_eq!(&a * &b, &x(2, 0).pow(2) - &x(2, 1).pow(4));
        assert!((&a * &Poly::zero(2)).is_zero());
        let one = c(1, rat_int(1));
        let sq = (&x(1, 0) + &one).pow(2);
        let expected = &(&x(1, 0).pow(2) + &x(1, 0).scale(&rat_int(2))) + &one;
        assert_eq!(sq, expected);
    }

    #[test]
    fn degree_examples() {
        assert_eq!((&x(2, 0) - &x(2, 1).pow(2)).total_degree(), Degree::Finite(2));
        assert_eq!(c(1, rat_int(5)).total_degree(), Degree::Finite(0));
        assert_eq!(Poly::zero(3).total_degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn eval_examples() {
        let p = &x(2, 0) - &x(2, 1).pow(2);
        assert_eq!(p.eval(&[rat(1, 4), rat(1, 2)]).unwrap(), rat_int(0));
        assert_eq!(x(2, 0).pow(2).eval(&[rat_int(3), rat_int(17)]).unwrap(), rat_int(9));
        assert_eq!(
            p.eval(&[rat_int(1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
        // f1 = x1^2 at (0.01, 0.1): exact value 1/10000
        let f1 = x(2, 0).pow(2);
        assert_eq!(f1.eval(&[rat(1, 100), rat(1, 10)]).unwrap(), rat(1, 10_000));
        let v: f64 = f1.eval_float(&[0.01, 0.1]).unwrap();
        assert!((v - 1e-4).abs() <= 1e-4 * 1e-14);
    }

    #[test]
    fn substitute_examples() {
        let curve = MonomialCurve::new(vec![2, 1], vec![rat_int(1), rat_int(1)], Regime::Local).unwrap();
        let f2 = &x(2, 0) - &x(2, 1).pow(2);
        assert!(f2.substitute_curve(&curve).unwrap().is_zero());
        let f1 = x(2, 0).pow(2);
        let u = f1.substitute_curve(&curve).unwrap();
        assert_eq!(u.terms().collect::<Vec<_>>(), vec![(4, &rat_int(1))]);

        let hyper = MonomialCurve::new(vec![-1, 1], vec![rat_int(1), rat_int(1)], Regime::Infinity).unwrap();
        let h = &(&x(2, 0) * &x(2, 1)) - &Poly::one(2);
        assert!(h.substitute_curve(&hyper).unwrap().is_zero());

        let short = MonomialCurve::new(vec![1], vec![rat_int(1)], Regime::Local).unwrap();
        assert!(matches!(f1.substitute_curve(&short), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn storage_order_is_graded() {
        let p = &(&(&x(2, 1).pow(2) + &x(2, 0).pow(2)) + &(&x(2, 0) * &x(2, 1))) + &Poly::one(2);
        let order: Vec<Vec<u32>> = p.terms().map(|(e, _)| e.as_slice().to_vec()).collect();
        assert_eq!(order, vec![vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn padding_and_shrinking() {
        let p = x(2, 0);
        let q = p.with_nvars(4).unwrap();
        assert_eq!(q.nvars(), 4);
        assert_eq!(q.with_nvars(1).unwrap().nvars(), 1);
        assert!(x(3, 2).with_nvars(2).is_err());
    }

    // Strategies over small random polynomials with rational coefficients.
    pub(crate) fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=7).prop_map(|(n, d)| rat(n, d))
    }

    pub(crate) fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(0..=max_deg, nvars), arb_rational()),
            0..=max_terms,
        )
        .prop_map(move |ts| {
            Poly::from_terms(nvars, ts.into_iter().map(|(e, c)| (ExpVec::new(e), c))).unwrap()
        })
    }

    fn arb_point(nvars: usize) -> impl Strategy<Value = Vec<BigRational>> {
        prop::collection::vec(arb_rational(), nvars)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_axioms_at_random_points(
            p in arb_poly(3, 3, 6),
            q in arb_poly(3, 3, 6),
            v in arb_point(3),
        ) {
            let pv = p.eval(&v).unwrap();
            let qv = q.eval(&v).unwrap();
            prop_assert_eq!((&p + &q).eval(&v).unwrap(), pv.clone() + qv.clone());
            prop_assert_eq!((&p * &q).eval(&v).unwrap(), pv * qv);
            prop_assert!((&p + &p.negate()).is_zero());
        }

        #[test]
        fn substitution_is_a_homomorphism(
            p in arb_poly(3, 3, 6),
            a in prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 3),
            s in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 3),
            t in prop_oneof![(1i64..=9, 1i64..=5), (-9i64..=-1, 1i64..=5)],
        ) {
            let s: Vec<BigRational> = s.into_iter().map(rat_int).collect();
            let curve = MonomialCurve::new(a, s, Regime::Infinity);
            prop_assume!(curve.is_ok());
            let curve = curve.unwrap();
            let t = rat(t.0, t.1);
            let along = p.substitute_curve(&curve).unwrap().eval(&t);
            let direct = p.eval(&curve.point_at(&t)).unwrap();
            prop_assert_eq!(along, direct);
        }

        #[test]
        fn monomial_degrees_add(
            e1 in prop::collection::vec(0u32..5, 3),
            e2 in prop::collection::vec(0u32..5, 3),
            c1 in arb_rational(),
            c2 in arb_rational(),
        ) {
            prop_assume!(c1 != rat_int(0) && c2 != rat_int(0));
            let p = Poly::monomial(3, ExpVec::new(e1), c1);
            let q = Poly::monomial(3, ExpVec::new(e2), c2);
            let sum = p.total_degree().finite().unwrap() + q.total_degree().finite().unwrap();
            prop_assert_eq!((&p * &q).total_degree(), Degree::Finite(sum));
        }
    }
}
