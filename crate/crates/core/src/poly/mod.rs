//! Sparse polynomials in `x1, x2, x3` or `x1, x2, x3, tr, tf, tg`.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{gen, Degree, Monomial, Ring, WeightVector, GEN_NAMES, NVARS};
pub use parse::{parse, parse_param};
pub use polynomial::{jacobian_det3, six, three, Polynomial, Term};
