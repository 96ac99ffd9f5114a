//! Exact lower-bound certificates for Łojasiewicz exponents.
//!
//! Along a monomial curve `x_i = s_i t^{a_i}` each member `f` of the system
//! becomes a Laurent polynomial in `t`. If `f∘p ~ c t^M` with `c > 0` and
//! `||p(t)|| ~ t^m`, then `Φ(p(t)) >= f(p(t))` shows that no exponent below
//! `M/m` can satisfy `Φ(x) >= C ||x||^M'` near the origin. At infinity the
//! same argument with growth orders gives the ratio `D/m`.

use num::{BigInt, Signed};

use crate::error::{Error, Result};
use crate::poly::{MaxSystem, MonomialCurve, MultiPoly, Regime};
use crate::scalar::Coeff;
use crate::{Curve, Rational};

/// Order of a single member along a curve.
#[derive(Debug, Clone, PartialEq)]
pub enum ComponentOrder<C> {
    IdenticallyZero,
    /// Lowest t-exponent (local) or highest (infinity) and its coefficient.
    Order { order: i64, leading: C },
}

impl<C> ComponentOrder<C> {
    pub fn order(&self) -> Option<i64> {
        match self {
            ComponentOrder::IdenticallyZero => None,
            ComponentOrder::Order { order, .. } => Some(*order),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessReport<C> {
    pub regime: Regime,
    /// Order of `Φ∘p`: vanishing order (local) or growth order (infinity).
    pub phi_order: i64,
    /// Order of `max_i |p_i(t)|`.
    pub norm_order: i64,
    /// `phi_order / norm_order`.
    pub exponent_bound: Rational,
    /// Member realising `phi_order` (first one on ties).
    pub dominating_index: usize,
    pub components: Vec<ComponentOrder<C>>,
}

pub fn component_order<C: Coeff + Signed>(p: &MultiPoly<C>, curve: &MonomialCurve<C>) -> Result<ComponentOrder<C>> {
    let u = p.substitute_curve(curve)?;
    let edge = match curve.regime() {
        Regime::Local => u.lowest(),
        Regime::Infinity => u.highest(),
    };
    Ok(match edge {
        None => ComponentOrder::IdenticallyZero,
        Some((order, c)) => ComponentOrder::Order { order, leading: c.clone() },
    })
}

/// Certificate for `Φ = max_i f_i` along `curve`.
///
/// Only members that are eventually positive along the curve can carry the
/// max, and any one of them already bounds `Φ` from below, so the best such
/// member is reported. If none exists, `Φ <= 0` along the curve for small
/// (or large) `t` and [`Error::NotEventuallyPositive`] is returned.
pub fn system_curve_order<C: Coeff + Signed>(
    sys: &MaxSystem<C>,
    curve: &MonomialCurve<C>,
) -> Result<WitnessReport<C>> {
    if sys.nvars() != curve.nvars() {
        return Err(Error::DimensionMismatch { expected: sys.nvars(), got: curve.nvars() });
    }
    let components = sys
        .polys()
        .iter()
        .map(|p| component_order(p, curve))
        .collect::<Result<Vec<_>>>()?;
    let regime = curve.regime();
    let mut best: Option<(usize, i64)> = None;
    for (i, c) in components.iter().enumerate() {
        let ComponentOrder::Order { order, leading } = c else { continue };
        if !leading.is_positive() {
            continue;
        }
        let better = match (best, regime) {
            (None, _) => true,
            (Some((_, b)), Regime::Local) => *order < b,
            (Some((_, b)), Regime::Infinity) => *order > b,
        };
        if better {
            best = Some((i, *order));
        }
    }
    let (dominating_index, phi_order) = best.ok_or(Error::NotEventuallyPositive)?;
    let norm_order = curve.norm_order();
    Ok(WitnessReport {
        regime,
        phi_order,
        norm_order,
        exponent_bound: Rational::new(BigInt::from(phi_order), BigInt::from(norm_order)),
        dominating_index,
        components,
    })
}

/// The curve `(t^{d^{n-1}}, t^{d^{n-2}}, …, t)` that annihilates every
/// `x_{i-1} - x_i^d` and makes `x_1^d` equal `t^{d^n}`.
pub fn canonical_worst_curve(n: u32, d: u32) -> Result<Curve> {
    if n < 1 || d < 2 {
        return Err(Error::DomainError(format!("need n >= 1 and d >= 2, got n={n} d={d}")));
    }
    let a = (0..n)
        .map(|i| {
            i64::from(d)
                .checked_pow(n - 1 - i)
                .ok_or_else(|| Error::DomainError("curve exponent overflows i64".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let s = vec![Rational::from_integer(1.into()); n as usize];
    MonomialCurve::new(a, s, Regime::Local)
}
