//! Exact arithmetic engine for the exponential automorphism `exp(uΔ)` of
//! `k[x1, x2, x3]`, its six-variable lift, and the degree-class bookkeeping
//! used to bound the degrees of words in it and affine maps.

pub mod coeffs;
pub mod derivation;
pub mod error;
pub mod objects;
pub mod pclass;
pub mod poly;
pub mod verify;

pub use coeffs::{Coeff, ParamFraction, ParamSymbol, Rational, SymbolSet};
pub use derivation::{endo_equal, Derivation, Endomorphism};
pub use error::{Error, Result};
pub use objects::{AffineMap, AffineType, DerivedParams, ModifiedLift};
pub use pclass::{CWitness, ClassIndex};
pub use poly::{Degree, Monomial, Polynomial, Ring, Term, WeightVector};
