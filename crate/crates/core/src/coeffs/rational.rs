use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Coeff;

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator.
///
/// Backed by `num_rational::BigRational`; integer operands skip the gcd
/// reduction, which covers almost every coefficient the kernel produces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    /// `n!` as an exact rational.
    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= k;
        }
        Rational::from_integer(acc)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational(q)
    }
}

impl<'a> Add<&'a Rational> for Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        if self.0.is_integer() && rhs.0.is_integer() {
            let (n, _) = self.0.into_raw();
            return Rational(BigRational::new_raw(n + rhs.0.numer(), BigInt::one()));
        }
        Rational(self.0 + &rhs.0)
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, rhs: &'a Rational) {
        let lhs = std::mem::take(self);
        *self = lhs + rhs;
    }
}

impl<'a> Sub<&'a Rational> for Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        if self.0.is_integer() && rhs.0.is_integer() {
            let (n, _) = self.0.into_raw();
            return Rational(BigRational::new_raw(n - rhs.0.numer(), BigInt::one()));
        }
        Rational(self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a Rational> for Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        if self.0.is_integer() && rhs.0.is_integer() {
            let (n, _) = self.0.into_raw();
            return Rational(BigRational::new_raw(n * rhs.0.numer(), BigInt::one()));
        }
        Rational(self.0 * &rhs.0)
    }
}

impl<'a> Div<&'a Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        Rational(self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_param_fraction(p: &super::ParamFraction) -> Option<Self> {
        p.as_rational()
    }

    fn try_inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn term_parts(&self) -> (bool, String) {
        let neg = self.0.is_negative();
        let mag = self.abs();
        if mag.0.is_one() {
            (neg, String::new())
        } else {
            (neg, mag.to_string())
        }
    }

    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s
                .parse::<BigInt>()
                .map(Rational::from_integer)
                .map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_thirds() {
        let a = Rational::new(1, 2);
        let b = Rational::new(1, 3);
        assert_eq!(a + &b, Rational::new(5, 6));
    }

    #[test]
    fn lowest_terms_and_sign() {
        let q = Rational::new(4, -6);
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(q.to_string(), "-2/3");
        assert_eq!(Rational::new(0, 5).to_string(), "0");
    }

    #[test]
    fn integer_fast_path_matches_general() {
        let a = Rational::from_integer(12);
        let b = Rational::from_integer(-5);
        assert_eq!(a.clone() * &b, Rational::from_integer(-60));
        assert_eq!(a.clone() - &b, Rational::from_integer(17));
        let c = Rational::new(1, 2);
        assert_eq!(a * &c, Rational::from_integer(6));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let q: Rational = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(Rational::factorial(0), Rational::from_integer(1));
        assert_eq!(Rational::factorial(6), Rational::from_integer(720));
    }
}
