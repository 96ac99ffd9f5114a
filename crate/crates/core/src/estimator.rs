//! Empirical Łojasiewicz exponents.
//!
//! For each radius `r` of a geometric schedule the minimum of `Φ` over the
//! max-norm sphere `max_i |x_i| = r` is approximated by multi-start pattern
//! search on each of its `2n` faces. A least-squares line through
//! `(ln r, ln min Φ)` then estimates `M` and `C` in `Φ(x) >= C ||x||^M`.
//!
//! Every `(face, start)` search is seeded from `(seed, face, start)` alone
//! and the best record is chosen by value and then by lexicographic argmin,
//! so results do not depend on the thread count.

// `!(x > 0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::cmp::Ordering;

use num::{BigInt, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{big_string, loja_bound};
use crate::error::{Error, Result};
use crate::poly::{Degree, FloatSystem, MaxSystem, Regime};
use crate::scalar::{Coeff, Real};

/// Geometric radii `r_k = r_start · ratio^k`, `k = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusSchedule<F> {
    r_start: F,
    ratio: F,
    count: usize,
    regime: Regime,
}

impl<F: Real> RadiusSchedule<F> {
    /// Local schedules shrink (`0 < ratio < 1`), infinity schedules grow.
    pub fn new(r_start: F, ratio: F, count: usize, regime: Regime) -> Result<Self> {
        if !(r_start > F::zero() && r_start.is_finite()) {
            return Err(Error::InvalidConfig(format!("r_start must be positive, got {r_start}")));
        }
        let ok = match regime {
            Regime::Local => ratio > F::zero() && ratio < F::one(),
            Regime::Infinity => ratio > F::one() && ratio.is_finite(),
        };
        if !ok {
            return Err(Error::InvalidConfig(format!("ratio {ratio} is invalid for the {regime:?} regime")));
        }
        if count < 3 {
            return Err(Error::InvalidConfig(format!("count must be >= 3, got {count}")));
        }
        Ok(RadiusSchedule { r_start, ratio, count, regime })
    }

    /// `count` radii from `from` to `to` inclusive; the regime follows from
    /// the direction.
    pub fn spanning(from: F, to: F, count: usize) -> Result<Self> {
        if count < 3 || !(from > F::zero()) || !(to > F::zero()) {
            return Err(Error::InvalidConfig("need count >= 3 and positive endpoints".into()));
        }
        let ratio = (to / from).powf(F::one() / F::from(count - 1).unwrap());
        let regime = if to < from { Regime::Local } else { Regime::Infinity };
        Self::new(from, ratio, count, regime)
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn radii(&self) -> Vec<F> {
        (0..self.count).map(|k| self.r_start * self.ratio.powi(k as i32)).collect()
    }
}

/// Search parameters. `step_init` and `step_tol` are relative to the radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptConfig<F> {
    pub starts: usize,
    pub max_iters: usize,
    pub step_init: F,
    pub step_tol: F,
    pub seed: u64,
    /// Worker threads; 0 uses rayon's default.
    #[serde(skip)]
    pub threads: usize,
    /// `slack = slack_residual · residual + slack_base` in the bound check.
    pub slack_residual: F,
    pub slack_base: F,
}

impl<F: Real> Default for OptConfig<F> {
    fn default() -> Self {
        OptConfig {
            starts: 64,
            max_iters: 4000,
            step_init: F::lit(0.25),
            // the deepest minima need steps far below the coordinates' own scale
            step_tol: F::min_positive_value() * F::lit(1e8),
            seed: 0,
            threads: 0,
            slack_residual: F::lit(3.0),
            slack_base: F::lit(0.25),
        }
    }
}

impl<F: Real> OptConfig<F> {
    pub fn validate(&self) -> Result<()> {
        if self.starts == 0 || self.max_iters == 0 {
            return Err(Error::InvalidConfig("starts and max_iters must be positive".into()));
        }
        if !(self.step_init > F::zero()) || !(self.step_tol > F::zero()) {
            return Err(Error::InvalidConfig("step_init and step_tol must be positive".into()));
        }
        Ok(())
    }
}

/// One face of the cube: `x_axis = sign · r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub axis: usize,
    pub sign: i8,
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Face", 2)?;
        st.serialize_field("variable", &(self.axis + 1))?;
        st.serialize_field("sign", &self.sign)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinRecord<F> {
    pub radius: F,
    pub min_value: F,
    pub argmin: Vec<F>,
    pub face: Face,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLogFit<F> {
    pub slope: F,
    pub intercept: F,
    /// Root-mean-square of the regression residuals.
    pub residual: F,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport<F> {
    pub regime: Regime,
    pub records: Vec<MinRecord<F>>,
    pub slope: F,
    pub intercept: F,
    pub residual: F,
    pub exponent_estimate: F,
    pub constant_estimate: F,
    pub nvars: usize,
    pub degree: u64,
    #[serde(serialize_with = "big_string")]
    pub loja_bound: BigInt,
    pub slack: F,
    /// Local: `slope <= bound + slack`; infinity: `slope >= -bound - slack`.
    pub bound_ok: bool,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the search `(face, start)`, independent of how many starts run.
pub fn sub_seed(seed: u64, face: usize, start: usize) -> u64 {
    splitmix64(splitmix64(seed) ^ ((face as u64) << 32 | start as u64 & 0xFFFF_FFFF))
}

fn cmp_value<F: Real>(a: F, b: F) -> Ordering {
    // NaN sorts last
    a.partial_cmp(&b).unwrap_or_else(|| a.is_nan().cmp(&b.is_nan()))
}

fn cmp_point<F: Real>(a: &[F], b: &[F]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| cmp_value(*x, *y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn better<F: Real>(a: &MinRecord<F>, b: &MinRecord<F>) -> bool {
    cmp_value(a.min_value, b.min_value).then_with(|| cmp_point(&a.argmin, &b.argmin)) == Ordering::Less
}

/// Compass search with per-coordinate steps over the free coordinates of a
/// face, followed by a pattern move along the last sweep's displacement.
fn pattern_search<F: Real>(
    sys: &FloatSystem<F>,
    mut x: Vec<F>,
    free: &[usize],
    r: F,
    cfg: &OptConfig<F>,
) -> (Vec<F>, F) {
    let mut fx = sys.eval_unchecked(&x);
    if free.is_empty() {
        return (x, fx);
    }
    let tol = (cfg.step_tol * r).max(F::min_positive_value());
    let cap = r + r;
    let clamp = |v: F| v.max(-r).min(r);
    let mut steps = vec![cfg.step_init * r; free.len()];
    let mut base = x.clone();
    for _ in 0..cfg.max_iters {
        if steps.iter().all(|&s| s < tol) {
            break;
        }
        base.copy_from_slice(&x);
        let mut improved = false;
        for (slot, &j) in free.iter().enumerate() {
            let step = steps[slot];
            if step < tol {
                continue;
            }
            let old = x[j];
            let mut moved = false;
            for cand in [clamp(old + step), clamp(old - step)] {
                if cand == old {
                    continue;
                }
                x[j] = cand;
                let f = sys.eval_unchecked(&x);
                if f < fx {
                    fx = f;
                    moved = true;
                    break;
                }
                x[j] = old;
            }
            if moved {
                steps[slot] = (step + step).min(cap);
                improved = true;
            } else {
                steps[slot] = step * F::lit(0.5);
            }
        }
        if improved {
            let y: Vec<F> = x
                .iter()
                .zip(&base)
                .enumerate()
                .map(|(i, (&xi, &bi))| if free.contains(&i) { clamp(xi + (xi - bi)) } else { xi })
                .collect();
            let fy = sys.eval_unchecked(&y);
            if fy < fx {
                x = y;
                fx = fy;
            }
        }
    }
    (x, fx)
}

fn search_face<F: Real>(sys: &FloatSystem<F>, r: F, face_id: usize, start: usize, cfg: &OptConfig<F>) -> MinRecord<F> {
    let n = sys.nvars();
    let face = Face { axis: face_id / 2, sign: if face_id.is_multiple_of(2) { 1 } else { -1 } };
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(cfg.seed, face_id, start));
    let mut x: Vec<F> = (0..n)
        .map(|_| {
            let u: f64 = rng.gen_range(-1.0..=1.0);
            F::lit(u) * r
        })
        .collect();
    x[face.axis] = if face.sign > 0 { r } else { -r };
    let free: Vec<usize> = (0..n).filter(|&i| i != face.axis).collect();
    let (argmin, min_value) = pattern_search(sys, x, &free, r, cfg);
    MinRecord { radius: r, min_value, argmin, face }
}

fn min_on_cube_compiled<F: Real>(sys: &FloatSystem<F>, r: F, cfg: &OptConfig<F>) -> MinRecord<F> {
    let tasks: Vec<(usize, usize)> =
        (0..2 * sys.nvars()).flat_map(|f| (0..cfg.starts).map(move |s| (f, s))).collect();
    let records: Vec<MinRecord<F>> =
        tasks.par_iter().map(|&(f, s)| search_face(sys, r, f, s, cfg)).collect();
    records
        .into_iter()
        .reduce(|best, rec| if better(&rec, &best) { rec } else { best })
        .expect("at least one face and one start")
}

fn with_threads<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return job();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Approximate minimum of `Φ` over `max_i |x_i| = r`. Always returns the
/// best point found; global optimality is not guaranteed.
pub fn min_on_cube<C, F>(sys: &MaxSystem<C>, r: F, cfg: &OptConfig<F>) -> Result<MinRecord<F>>
where
    C: Coeff + ToPrimitive,
    F: Real,
{
    cfg.validate()?;
    if !(r > F::zero()) {
        return Err(Error::InvalidConfig(format!("radius must be positive, got {r}")));
    }
    let compiled = FloatSystem::from_system(sys);
    Ok(with_threads(cfg.threads, || min_on_cube_compiled(&compiled, r, cfg)))
}

/// Ordinary least squares through `(ln radius, ln min_value)`.
pub fn fit_loglog<F: Real>(records: &[MinRecord<F>]) -> Result<LogLogFit<F>> {
    if records.len() < 3 {
        return Err(Error::TooFewPoints(records.len()));
    }
    if let Some(rec) = records.iter().find(|r| !(r.min_value > F::zero())) {
        return Err(Error::NonPositiveMin {
            radius: rec.radius.to_f64().unwrap_or(f64::NAN),
            value: rec.min_value.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut radii: Vec<F> = records.iter().map(|r| r.radius).collect();
    radii.sort_by(|a, b| cmp_value(*a, *b));
    if radii.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DegenerateRadii);
    }
    let k = F::from(records.len()).unwrap();
    let xs: Vec<F> = records.iter().map(|r| r.radius.ln()).collect();
    let ys: Vec<F> = records.iter().map(|r| r.min_value.ln()).collect();
    let mx = xs.iter().copied().sum::<F>() / k;
    let my = ys.iter().copied().sum::<F>() / k;
    let sxx: F = xs.iter().map(|&x| (x - mx) * (x - mx)).sum();
    let sxy: F = xs.iter().zip(&ys).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    if !(sxx > F::zero()) {
        return Err(Error::DegenerateRadii);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: F = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    Ok(LogLogFit { slope, intercept, residual: (sse / k).sqrt() })
}

/// Minimise on every scheduled cube, fit the log-log line and compare the
/// slope with the proven exponent for `(nvars, max degree)`.
pub fn estimate_exponent<C, F>(sys: &MaxSystem<C>, sched: &RadiusSchedule<F>, cfg: &OptConfig<F>) -> Result<EstimateReport<F>>
where
    C: Coeff + ToPrimitive,
    F: Real,
{
    cfg.validate()?;
    let compiled = FloatSystem::from_system(sys);
    let mut records: Vec<MinRecord<F>> = with_threads(cfg.threads, || {
        sched.radii().into_iter().map(|r| min_on_cube_compiled(&compiled, r, cfg)).collect()
    });
    if let Some(bad) = records.iter().find(|r| !(r.min_value > F::zero())) {
        return Err(Error::HypothesisViolated {
            radius: bad.radius.to_f64().unwrap_or(f64::NAN),
            value: bad.min_value.to_f64().unwrap_or(f64::NAN),
            argmin: bad.argmin.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect(),
        });
    }
    records.sort_by(|a, b| cmp_value(a.radius, b.radius));
    let fit = fit_loglog(&records)?;
    let nvars = sys.nvars();
    let degree = match sys.max_degree() {
        Degree::Finite(d) => d.max(1),
        Degree::NegInfinity => 1,
    };
    let bound = loja_bound(nvars as u64, degree)?;
    let bound_f = F::from(bound.to_f64().unwrap_or(f64::INFINITY)).unwrap_or_else(F::infinity);
    let slack = cfg.slack_residual * fit.residual + cfg.slack_base;
    let bound_ok = match sched.regime() {
        Regime::Local => fit.slope <= bound_f + slack,
        Regime::Infinity => fit.slope >= -bound_f - slack,
    };
    Ok(EstimateReport {
        regime: sched.regime(),
        records,
        slope: fit.slope,
        intercept: fit.intercept,
        residual: fit.residual,
        exponent_estimate: fit.slope,
        constant_estimate: fit.intercept.exp(),
        nvars,
        degree,
        loja_bound: bound,
        slack,
        bound_ok,
    })
}
