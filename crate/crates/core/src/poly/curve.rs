use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{pow_by_squaring, Coeff};

/// Direction of the asymptotics: the origin (`t -> 0+`) or infinity
/// (`t -> +inf`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Local,
    Infinity,
}

impl std::str::FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local" => Ok(Regime::Local),
            "infinity" => Ok(Regime::Infinity),
            other => Err(Error::InvalidConfig(format!("unknown regime {other:?}"))),
        }
    }
}

/// The curve `x_i(t) = s_i t^{a_i}` for `t > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialCurve<C> {
    a: Vec<i64>,
    s: Vec<C>,
    regime: Regime,
}

impl<C: Coeff> MonomialCurve<C> {
    /// Local curves need every `a_i > 0` so the curve tends to the origin;
    /// infinity curves need some `a_i > 0` so it leaves every bounded set.
    pub fn new(a: Vec<i64>, s: Vec<C>, regime: Regime) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidCurve("curve has no coordinates".into()));
        }
        if a.len() != s.len() {
            return Err(Error::InvalidCurve(format!(
                "{} exponents but {} coefficients",
                a.len(),
                s.len()
            )));
        }
        if a.contains(&0) {
            return Err(Error::InvalidCurve("exponents must be nonzero".into()));
        }
        if s.iter().any(|c| c.is_zero()) {
            return Err(Error::InvalidCurve("coefficients must be nonzero".into()));
        }
        match regime {
            Regime::Local if a.iter().any(|&x| x < 0) => {
                return Err(Error::InvalidCurve("local curves need positive exponents".into()))
            }
            Regime::Infinity if a.iter().all(|&x| x < 0) => {
                return Err(Error::InvalidCurve(
                    "infinity curves need at least one positive exponent".into(),
                ))
            }
            _ => {}
        }
        Ok(MonomialCurve { a, s, regime })
    }

    pub fn nvars(&self) -> usize {
        self.a.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.a
    }

    pub fn coeffs(&self) -> &[C] {
        &self.s
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Order `m` of the max-norm: `||p(t)|| ~ t^m`.
    pub fn norm_order(&self) -> i64 {
        match self.regime {
            Regime::Local => *self.a.iter().min().expect("nonempty"),
            Regime::Infinity => *self.a.iter().max().expect("nonempty"),
        }
    }

    pub fn point_at(&self, t: &C) -> Vec<C> {
        self.a
            .iter()
            .zip(&self.s)
            .map(|(&k, s)| {
                let p = pow_by_squaring(t, k.unsigned_abs() as u32);
                if k >= 0 {
                    s.clone() * p
                } else {
                    s.clone() / p
                }
            })
            .collect()
    }
}
