//! Exact scalars, `τ`-polynomials, truncated `λ`-series and Bernoulli numbers.

pub mod bernoulli;
pub mod gaussian;
pub mod interp;
pub mod rational;
pub mod series;
pub mod tau;

pub use bernoulli::{abs_bernoulli_even, bernoulli, bernoulli_by_series};
pub use gaussian::{Gaussian, GaussianJson};
pub use interp::{eval_poly, interpolate};
pub use rational::{binomial, factorial, format_rational, harmonic, int, parse_rational, rat, Rational};
pub use series::{sin_double_half, sinh_double_half, LambdaSeries, SeriesJson};
pub use tau::TauPoly;
