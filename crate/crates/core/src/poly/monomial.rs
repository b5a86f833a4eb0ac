use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const NVARS: usize = 6;

pub const GEN_NAMES: [&str; NVARS] = ["x1", "x2", "x3", "tr", "tf", "tg"];

/// Generator indices in the six-variable ring.
pub mod gen {
    pub const X1: usize = 0;
    pub const X2: usize = 1;
    pub const X3: usize = 2;
    pub const TR: usize = 3;
    pub const TF: usize = 4;
    pub const TG: usize = 5;
}

/// Which polynomial ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "three_vars")]
    Three,
    #[serde(rename = "six_vars")]
    Six,
}

impl Ring {
    pub fn ngens(self) -> usize {
        match self {
            Ring::Three => 3,
            Ring::Six => 6,
        }
    }

    pub fn gen_names(self) -> &'static [&'static str] {
        &GEN_NAMES[..self.ngens()]
    }
}

/// Exponent vector `(x1, x2, x3, tr, tf, tg)`.
///
/// `Ord` is the sixth cyclic lexicographic order: the `tg` exponent decides
/// first, ties are broken lexicographically on `(x1, x2, x3, tr, tf)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(index: usize, exp: u32) -> Self {
        let mut m = Self::ONE;
        m.0[index] = exp;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o = o.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &WeightVector) -> u64 {
        self.0.iter().zip(w.0).map(|(&e, wi)| e as u64 * wi).sum()
    }

    /// Lives in the three-variable ring.
    pub fn is_three_var(&self) -> bool {
        self.0[3..].iter().all(|&e| e == 0)
    }

    pub(crate) fn write(&self, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (name, &e) in GEN_NAMES.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0[gen::TG]
            .cmp(&other.0[gen::TG])
            .then_with(|| self.0[..gen::TG].cmp(&other.0[..gen::TG]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.write(f)
    }
}

/// Non-negative integer weights on the six generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightVector(pub [u64; NVARS]);

impl WeightVector {
    pub const W1: WeightVector = WeightVector([1, 2, 3, 1, 0, 1]);
    pub const W2: WeightVector = WeightVector([0, 0, 0, 0, 1, 0]);
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tg_exponent_decides_first() {
        let a = Monomial([5, 0, 0, 0, 0, 0]);
        let b = Monomial([0, 0, 0, 0, 0, 1]);
        assert!(b > a);
    }

    #[test]
    fn tie_broken_at_first_differing_position() {
        // tf^2*tg vs x3*tg: x3 is the first differing position.
        let tf2tg = Monomial([0, 0, 0, 0, 2, 1]);
        let x3tg = Monomial([0, 0, 1, 0, 0, 1]);
        assert!(x3tg > tf2tg);
    }

    #[test]
    fn weights() {
        let m = Monomial([1, 2, 0, 0, 0, 1]);
        assert_eq!(m.weighted_degree(&WeightVector::W1), 6);
        let tf5 = Monomial::var(gen::TF, 5);
        assert_eq!(tf5.weighted_degree(&WeightVector::W1), 0);
        assert_eq!(tf5.weighted_degree(&WeightVector::W2), 5);
    }

    #[test]
    fn degree_sentinel_is_smallest() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::array::uniform6(0u32..4).prop_map(Monomial)
    }

    proptest! {
        #[test]
        fn order_is_total(a in mono(), b in mono()) {
            let lt = a < b;
            let gt = a > b;
            prop_assert_eq!(a == b, !lt && !gt);
            prop_assert!(!(lt && gt));
        }

        #[test]
        fn order_is_multiplicative(a in mono(), b in mono(), c in mono()) {
            if a < b {
                prop_assert!(a.mul(&c) < b.mul(&c));
            }
        }
    }
}
