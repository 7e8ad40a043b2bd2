//! Exact scalar and polynomial arithmetic.
//!
//! Everything in the crate bottoms out here: big rationals, sparse Laurent
//! polynomials in one formal variable, dense univariate polynomials, and the
//! handful of combinatorial helpers the module actions need.

mod laurent;
mod rational;
mod unipoly;

pub use laurent::{laurent_mul, LaurentPoly};
pub use rational::{
    binomial, factorial, format_coefficient, format_rational, int, parse_rational, rat,
    serde_rational, Rational,
};
pub use unipoly::{poly_shift, UniPoly};
