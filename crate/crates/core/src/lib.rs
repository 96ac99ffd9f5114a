//! Explicit Łojasiewicz exponent bounds for real polynomial systems.
//!
//! The crate is organised around a handful of independent pieces:
//!
//! * [`poly`]: sparse multivariate polynomials with exact coefficients,
//!   max-systems `Φ(x) = max_i f_i(x)` and substitution along monomial curves.
//! * [`text`]: the textual polynomial grammar and the system file format.
//! * [`series`]: truncated power series used to extract critical-point counts.
//! * [`bounds`]: closed-form exponent bounds and critical-point counts.
//! * [`witness`]: exact lower-bound certificates from curve substitution.
//! * [`estimator`]: empirical exponents from minima on max-norm cubes.
//! * [`systems`]: generators for the extremal families.
//! * [`report`]: JSON/CSV front end shared by the `loja` binary.
//!
//! Symbolic code is generic over the coefficient ring ([`scalar::Coeff`]) and
//! numeric code over the float type ([`scalar::Real`]); the aliases below fix
//! the instantiations the binary uses.

pub mod bounds;
pub mod error;
pub mod estimator;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod series;
pub mod systems;
pub mod text;
pub mod witness;

pub use error::{Error, Result};
pub use text::{parse_poly, parse_system_file, print_poly, print_system};
pub use poly::{ExpVec, MaxSystem, MonomialCurve, MultiPoly, Regime, UniPoly};
pub use series::TruncatedSeries;

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Arbitrary-precision integer used for every count and bound.
pub type BigInt = num::BigInt;

/// Polynomial with exact rational coefficients.
pub type Poly = MultiPoly<Rational>;

/// Max-system over exact rationals.
pub type System = MaxSystem<Rational>;

/// Laurent polynomial in the curve parameter, exact rationals.
pub type Laurent = UniPoly<Rational>;

/// Monomial curve with rational coefficients.
pub type Curve = MonomialCurve<Rational>;

/// Power series in `H` over the rationals.
pub type Series = TruncatedSeries<Rational>;

/// Binary64 estimator outputs.
pub type Estimate = estimator::EstimateReport<f64>;
pub type MinRecord = estimator::MinRecord<f64>;
pub type OptConfig = estimator::OptConfig<f64>;
pub type RadiusSchedule = estimator::RadiusSchedule<f64>;
