use num::ToPrimitive;

use super::{Degree, FloatPoly, MultiPoly};
use crate::error::{Error, Result};
use crate::scalar::{Coeff, Real};

/// `Φ(x) = max_i f_i(x)` over a nonempty list of polynomials in a common
/// number of variables.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxSystem<C> {
    nvars: usize,
    polys: Vec<MultiPoly<C>>,
}

impl<C: Coeff> MaxSystem<C> {
    pub fn new(polys: Vec<MultiPoly<C>>) -> Result<Self> {
        let first = polys.first().ok_or(Error::EmptySystem)?;
        let nvars = first.nvars();
        if let Some(p) = polys.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::VariableCountMismatch { left: nvars, right: p.nvars() });
        }
        Ok(MaxSystem { nvars, polys })
    }

    /// Pad every member to the largest variable count present.
    pub fn padded(polys: Vec<MultiPoly<C>>) -> Result<Self> {
        let nvars = polys.iter().map(MultiPoly::nvars).max().ok_or(Error::EmptySystem)?;
        let polys = polys.iter().map(|p| p.with_nvars(nvars)).collect::<Result<_>>()?;
        Self::new(polys)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly<C>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Largest member degree.
    pub fn max_degree(&self) -> Degree {
        self.polys.iter().map(MultiPoly::total_degree).max().unwrap_or(Degree::NegInfinity)
    }

    /// `F = Σ f_i²`.
    pub fn sum_of_squares(&self) -> MultiPoly<C> {
        self.polys
            .iter()
            .fold(MultiPoly::zero(self.nvars), |acc, p| &acc + &p.square())
    }

    /// The system `{f_1, -f_1, f_2, -f_2, …}`, whose max is `max_i |f_i|`.
    pub fn absolute(&self) -> Self {
        MaxSystem {
            nvars: self.nvars,
            polys: self.polys.iter().flat_map(|p| [p.clone(), p.negate()]).collect(),
        }
    }
}

impl<C: Coeff + PartialOrd> MaxSystem<C> {
    pub fn eval_max(&self, point: &[C]) -> Result<C> {
        let mut best: Option<C> = None;
        for p in &self.polys {
            let v = p.eval(point)?;
            best = match best {
                Some(b) if b >= v => Some(b),
                _ => Some(v),
            };
        }
        Ok(best.expect("nonempty system"))
    }
}

impl<C: Coeff + ToPrimitive> MaxSystem<C> {
    pub fn eval_max_float<F: Real>(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        Ok(FloatSystem::from_system(self).eval_unchecked(point))
    }
}

/// A max-system with coefficients rounded once to `F`.
#[derive(Debug, Clone)]
pub struct FloatSystem<F> {
    nvars: usize,
    polys: Vec<FloatPoly<F>>,
}

impl<F: Real> FloatSystem<F> {
    pub fn from_system<C: Coeff + ToPrimitive>(sys: &MaxSystem<C>) -> Self {
        FloatSystem { nvars: sys.nvars, polys: sys.polys.iter().map(FloatPoly::from_poly).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// NaN member values are treated as `+inf` so they are never selected
    /// as a minimum.
    pub fn eval_unchecked(&self, point: &[F]) -> F {
        self.polys.iter().fold(F::neg_infinity(), |acc, p| {
            let v = p.eval_unchecked(point);
            if v.is_nan() {
                F::infinity()
            } else {
                acc.max(v)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::Poly;

    fn worst22() -> MaxSystem<num::BigRational> {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        MaxSystem::new(vec![x1.pow(2), &x1 - &x2.pow(2)]).unwrap()
    }

    #[test]
    fn eval_max_examples() {
        let sys = worst22();
        assert_eq!(sys.eval_max(&[rat(1, 100), rat(1, 10)]).unwrap(), rat(1, 10_000));
        assert_eq!(sys.eval_max(&[rat_int(0), rat_int(0)]).unwrap(), rat_int(0));
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let quadrant = MaxSystem::new(vec![&x + &y, x.negate(), y.negate()]).unwrap();
        assert_eq!(quadrant.eval_max(&[rat_int(-1), rat_int(0)]).unwrap(), rat_int(1));
        let f: f64 = sys.eval_max_float(&[0.01, 0.1]).unwrap();
        assert!((f - 1e-4).abs() < 1e-18);
        assert!(matches!(sys.eval_max(&[rat_int(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(MaxSystem::<num::BigRational>::new(vec![]), Err(Error::EmptySystem));
        assert!(MaxSystem::new(vec![Poly::var(1, 0), Poly::var(2, 1)]).is_err());
        let s = MaxSystem::padded(vec![Poly::var(1, 0), Poly::var(2, 1)]).unwrap();
        assert_eq!(s.nvars(), 2);
    }

    #[test]
    fn sum_of_squares_examples() {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let f = worst22().sum_of_squares();
        let expected = &x1.pow(4) + &(&x1 - &x2.pow(2)).pow(2);
        assert_eq!(f, expected);
        assert_eq!(f.total_degree(), Degree::Finite(4));
        let one = MaxSystem::new(vec![Poly::var(1, 0)]).unwrap();
        assert_eq!(one.sum_of_squares(), Poly::var(1, 0).pow(2));
        let two = MaxSystem::new(vec![x1.clone(), x2.clone()]).unwrap();
        assert_eq!(two.sum_of_squares(), &x1.pow(2) + &x2.pow(2));
    }

    #[test]
    fn absolute_takes_both_signs() {
        let abs = worst22().absolute();
        assert_eq!(abs.len(), 4);
        // at (0, 1/2): f1 = 0, f2 = -1/4, so max|f_i| = 1/4 while max f_i = 0
        let p = [rat_int(0), rat(1, 2)];
        assert_eq!(worst22().eval_max(&p).unwrap(), rat_int(0));
        assert_eq!(abs.eval_max(&p).unwrap(), rat(1, 4));
    }
}
