//! Generators for the extremal families and the semi-algebraic reduction.

use crate::error::{Error, Result};
use crate::poly::{Degree, MaxSystem, MultiPoly};
use crate::scalar::Coeff;

/// `{x_1^d, x_1 - x_2^d, …, x_{n-1} - x_n^d}`.
pub fn worst_case<C: Coeff>(n: u32, d: u32) -> Result<MaxSystem<C>> {
    if n < 1 || d < 2 {
        return Err(Error::DomainError(format!("need n >= 1 and d >= 2, got n={n} d={d}")));
    }
    let n = n as usize;
    let x = |i: usize| MultiPoly::<C>::var(n, i);
    let mut polys = vec![x(0).pow(d)];
    polys.extend((1..n).map(|i| &x(i - 1) - &x(i).pow(d)));
    MaxSystem::new(polys)
}

/// `F + (ℓ - x_{n+1}^d)^2` in `n + 1` variables, where `F` and the linear
/// form `ℓ` live in the first `n`.
pub fn pemantle_lift<C: Coeff>(f: &MultiPoly<C>, d: u32, ell: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    if d < 2 {
        return Err(Error::DomainError(format!("need d >= 2, got {d}")));
    }
    let n = f.nvars();
    if ell.is_zero() || ell.terms().any(|(e, _)| e.degree() != 1) {
        return Err(Error::NotLinear);
    }
    if let Some(v) = ell.max_var_used().filter(|&v| v >= n) {
        return Err(Error::VariableLeak { index: v + 1 });
    }
    let lifted_f = f.with_nvars(n + 1)?;
    let lifted_ell = ell.with_nvars(n + 1)?;
    let tail = MultiPoly::var(n + 1, n).pow(d);
    Ok(&lifted_f + &(&lifted_ell - &tail).square())
}

/// Default linear form for [`pemantle_lift`]: the last base variable.
pub fn default_ell<C: Coeff>(nvars: usize) -> MultiPoly<C> {
    MultiPoly::var(nvars, nvars - 1)
}

/// `{F, x_{n+1}}` where `F` is the sum of squares of `worst_case(n, d)`.
/// Repeating `x_{n+1}` would not change the max, so it appears once.
pub fn mixed_degree_counterexample<C: Coeff>(n: u32, d: u32) -> Result<MaxSystem<C>> {
    let f = worst_case::<C>(n, d)?.sum_of_squares();
    let m = n as usize + 1;
    MaxSystem::new(vec![f.with_nvars(m)?, MultiPoly::var(m, m - 1)])
}

/// Objective family `f`, equations `g_j = 0`, inequalities `h_k >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiAlgSpec<C> {
    nvars: usize,
    f: Vec<MultiPoly<C>>,
    g: Vec<MultiPoly<C>>,
    h: Vec<MultiPoly<C>>,
}

impl<C: Coeff> SemiAlgSpec<C> {
    /// Members are padded to the largest variable count among them.
    pub fn new(f: Vec<MultiPoly<C>>, g: Vec<MultiPoly<C>>, h: Vec<MultiPoly<C>>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::EmptySystem);
        }
        let nvars = f.iter().chain(&g).chain(&h).map(MultiPoly::nvars).max().unwrap_or(1);
        let pad = |v: Vec<MultiPoly<C>>| v.iter().map(|p| p.with_nvars(nvars)).collect::<Result<Vec<_>>>();
        Ok(SemiAlgSpec { nvars, f: pad(f)?, g: pad(g)?, h: pad(h)? })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn objective(&self) -> MaxSystem<C> {
        MaxSystem::new(self.f.clone()).expect("f is nonempty with common nvars")
    }

    pub fn equations(&self) -> &[MultiPoly<C>] {
        &self.g
    }

    pub fn inequalities(&self) -> &[MultiPoly<C>] {
        &self.h
    }
}

/// `Ψ = max{f_i, g_j, -g_j, -h_k}`, in that order. `Ψ > 0` off the set
/// `{g = 0, h >= 0}` and `Ψ = max f_i` on it wherever `max f_i >= 0`.
pub fn semialg_psi<C: Coeff>(spec: &SemiAlgSpec<C>) -> MaxSystem<C> {
    let mut polys = spec.f.clone();
    for g in &spec.g {
        polys.push(g.clone());
        polys.push(g.negate());
    }
    polys.extend(spec.h.iter().map(MultiPoly::negate));
    MaxSystem::new(polys).expect("f is nonempty with common nvars")
}

/// Degree of a lift as predicted from its inputs: `max(deg F, 2d)`.
pub fn lift_degree(f_degree: Degree, d: u32) -> Degree {
    f_degree.max(Degree::Finite(2 * u64::from(d)))
}
