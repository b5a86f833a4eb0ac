//! Exact scalar arithmetic.
//!
//! Two coefficient fields are provided: [`Rational`] for numeric runs and
//! [`ParamFraction`] for symbolic runs over a fixed roster of parameters.
//! Everything above this layer is generic over [`Coeff`].

mod param;
mod rational;

pub use param::{ParamFraction, ParamMonomial, ParamSymbol, SymbolSet, ROSTER_LEN};
pub use rational::Rational;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A coefficient field usable by the polynomial kernel.
///
/// Equality must be exact (canonical representations), so `==` doubles as
/// the zero test used when stripping terms.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;

    /// Converts a parsed parameter expression; `None` when it does not live
    /// in this field (a symbolic value for a numeric field).
    fn from_param_fraction(p: &ParamFraction) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    /// Multiplicative inverse when this element is a unit of the field
    /// (for [`ParamFraction`], a monomial in invertible symbols).
    fn try_inverse(&self) -> Option<Self>;

    /// Sign and magnitude text for printing inside a polynomial term.
    ///
    /// Returns `(negative, magnitude)`; the magnitude is empty when it is one
    /// and is parenthesized when it is a compound expression.
    fn term_parts(&self) -> (bool, String);

    /// Canonical standalone text.
    fn canonical(&self) -> String;

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}
