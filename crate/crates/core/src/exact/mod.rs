//! Exact arithmetic: rationals, Laurent polynomials and rational functions in
//! `q`, bivariate rational functions in `(a, q)`, multivariate polynomials
//! with simplex integration, and truncated q-series.

mod field;
mod mpoly;
mod polyq;
mod qseries;
mod ratfunaq;
mod ratfunq;
mod rational;

pub use field::Field;
pub use mpoly::{q_simplex_integrate, simplex_integrate, simplex_steps, MPoly};
pub use polyq::{q_binomial, q_pochhammer, PolyQ};
pub use qseries::QSeries;
pub use ratfunaq::{PolyAQ, RatFunAQ};
pub use ratfunq::RatFunQ;
pub use rational::{
    as_integer, big, binomial, factorial, fmt_rational, int, parse_rational, pochhammer, rat,
    Rational,
};
