//! Exact polynomial arithmetic: rationals, multivariate and univariate
//! polynomials, symmetry utilities and subresultant sequences.

pub mod interval;
pub mod multipoly;
pub mod rational;
pub mod symmetric;
pub mod unipoly;

pub use multipoly::MultiPoly;
pub use rational::{format_rational, parse_rational, rat, rat_int, sign, Rational};
pub use interval::RatInterval;
pub use symmetric::{is_symmetric, power_sum, powersum_decompose};
pub use unipoly::{signed_subresultants, variation_difference, UniPoly};
