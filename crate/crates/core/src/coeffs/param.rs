//! Rational functions in the parameter roster whose denominators are
//! monomials in invertible symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{Coeff, Rational};

pub const ROSTER_LEN: usize = 18;

/// The fixed parameter roster, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamSymbol {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    D1,
    D2,
    D3,
    U,
    V,
    P,
    Q,
    S,
    T,
}

impl ParamSymbol {
    pub const ALL: [ParamSymbol; ROSTER_LEN] = [
        ParamSymbol::A1,
        ParamSymbol::A2,
        ParamSymbol::A3,
        ParamSymbol::B1,
        ParamSymbol::B2,
        ParamSymbol::B3,
        ParamSymbol::C1,
        ParamSymbol::C2,
        ParamSymbol::C3,
        ParamSymbol::D1,
        ParamSymbol::D2,
        ParamSymbol::D3,
        ParamSymbol::U,
        ParamSymbol::V,
        ParamSymbol::P,
        ParamSymbol::Q,
        ParamSymbol::S,
        ParamSymbol::T,
    ];

    const NAMES: [&'static str; ROSTER_LEN] = [
        "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3", "u", "v", "P", "Q",
        "S", "T",
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        Self::NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Self::ALL[i])
    }

    /// Matrix entry `a_{row,col}` under the row-letter shorthand
    /// (`a_j`, `b_j`, `c_j` for rows 1, 2, 3).
    pub fn matrix_entry(row: usize, col: usize) -> Self {
        assert!(row < 3 && col < 3);
        Self::ALL[3 * row + col]
    }

    pub fn translation(col: usize) -> Self {
        assert!(col < 3);
        Self::ALL[9 + col]
    }
}

impl fmt::Display for ParamSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bitmask over the roster.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolSet(u32);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn all() -> Self {
        SymbolSet((1 << ROSTER_LEN) - 1)
    }

    pub fn of(symbols: &[ParamSymbol]) -> Self {
        symbols.iter().fold(Self::EMPTY, |s, &p| s.with(p))
    }

    pub fn with(self, s: ParamSymbol) -> Self {
        SymbolSet(self.0 | (1 << s.index()))
    }

    pub fn contains(self, s: ParamSymbol) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn union(self, other: SymbolSet) -> Self {
        SymbolSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = ParamSymbol> {
        ParamSymbol::ALL
            .into_iter()
            .filter(move |s| self.contains(*s))
    }
}

/// Exponent vector over the roster.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamMonomial(pub [u16; ROSTER_LEN]);

impl ParamMonomial {
    pub const ONE: ParamMonomial = ParamMonomial([0; ROSTER_LEN]);

    pub fn var(s: ParamSymbol, e: u16) -> Self {
        let mut m = Self::ONE;
        m.0[s.index()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, s: ParamSymbol) -> u16 {
        self.0[s.index()]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o = o.checked_add(e).expect("parameter exponent overflow");
        }
        out
    }

    /// Componentwise `self - other`; caller guarantees divisibility.
    fn div(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o -= e;
        }
        out
    }

    fn lcm(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0) {
            *o = (*o).max(e);
        }
        out
    }

    pub fn symbols(&self) -> impl Iterator<Item = (ParamSymbol, u16)> + '_ {
        ParamSymbol::ALL
            .into_iter()
            .zip(self.0)
            .filter(|(_, e)| *e > 0)
    }

    fn write(&self, f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (s, e) in self.symbols() {
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `numerator / denominator` where the denominator is a monomial in
/// invertible symbols and shares no symbol power with every numerator term.
#[derive(Clone)]
pub struct ParamFraction {
    num: BTreeMap<ParamMonomial, Rational>,
    den: ParamMonomial,
    invertible: SymbolSet,
}

impl ParamFraction {
    pub fn constant(q: Rational) -> Self {
        let mut num = BTreeMap::new();
        if !Coeff::is_zero(&q) {
            num.insert(ParamMonomial::ONE, q);
        }
        ParamFraction {
            num,
            den: ParamMonomial::ONE,
            invertible: SymbolSet::EMPTY,
        }
    }

    pub fn symbol(s: ParamSymbol, invertible: bool) -> Self {
        let mut num = BTreeMap::new();
        num.insert(ParamMonomial::var(s, 1), Rational::from_integer(1));
        ParamFraction {
            num,
            den: ParamMonomial::ONE,
            invertible: if invertible {
                SymbolSet::EMPTY.with(s)
            } else {
                SymbolSet::EMPTY
            },
        }
    }

    /// Builds `c * m / d` with the given invertible set; normalizes.
    pub fn from_parts(
        num: impl IntoIterator<Item = (ParamMonomial, Rational)>,
        den: ParamMonomial,
        invertible: SymbolSet,
    ) -> Result<Self> {
        for (s, e) in den.symbols() {
            if e > 0 && !invertible.contains(s) {
                return Err(Error::NotAMonomialUnit(format!(
                    "denominator symbol {s} is not invertible"
                )));
            }
        }
        let mut acc: BTreeMap<ParamMonomial, Rational> = BTreeMap::new();
        for (m, c) in num {
            add_term(&mut acc, m, c);
        }
        Ok(ParamFraction {
            num: acc,
            den,
            invertible,
        }
        .normalized())
    }

    pub fn numerator(&self) -> &BTreeMap<ParamMonomial, Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &ParamMonomial {
        &self.den
    }

    pub fn invertible(&self) -> SymbolSet {
        self.invertible
    }

    pub fn with_invertible(mut self, set: SymbolSet) -> Self {
        self.invertible = self.invertible.union(set);
        self
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.keys().all(|m| m.is_one())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.num
                .get(&ParamMonomial::ONE)
                .cloned()
                .unwrap_or_else(<Rational as Coeff>::zero),
        )
    }

    /// Symbols occurring anywhere in the fraction.
    pub fn symbols(&self) -> SymbolSet {
        let mut set = SymbolSet::EMPTY;
        for m in self.num.keys().chain(std::iter::once(&self.den)) {
            for (s, _) in m.symbols() {
                set = set.with(s);
            }
        }
        set
    }

    /// Divides out the largest monomial shared by the denominator and every
    /// numerator term.
    pub fn normalize(&self) -> Self {
        self.clone().normalized()
    }

    fn normalized(mut self) -> Self {
        if self.num.is_empty() {
            self.den = ParamMonomial::ONE;
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        let mut common = self.den;
        for m in self.num.keys() {
            for (c, e) in common.0.iter_mut().zip(m.0) {
                *c = (*c).min(e);
            }
        }
        if common.is_one() {
            return self;
        }
        self.den = self.den.div(&common);
        self.num = std::mem::take(&mut self.num)
            .into_iter()
            .map(|(m, c)| (m.div(&common), c))
            .collect();
        self
    }

    /// `1/a` for a single-term numerator built from invertible symbols.
    pub fn invert_monomial(&self) -> Result<Self> {
        if self.num.len() != 1 {
            return Err(Error::NotAMonomialUnit(self.canonical()));
        }
        let (m, c) = self.num.iter().next().unwrap();
        for (s, _) in m.symbols() {
            if !self.invertible.contains(s) {
                return Err(Error::NotAMonomialUnit(format!(
                    "{} (symbol {s} is not invertible)",
                    self.canonical()
                )));
            }
        }
        let inv = c.recip().expect("stored coefficients are nonzero");
        let mut num = BTreeMap::new();
        num.insert(self.den, inv);
        Ok(ParamFraction {
            num,
            den: *m,
            invertible: self.invertible,
        }
        .normalized())
    }

    /// Exact value under a numeric assignment.
    pub fn evaluate(
        &self,
        assignment: &dyn Fn(ParamSymbol) -> Option<Rational>,
    ) -> Result<Rational> {
        let mut cache: [Option<Rational>; ROSTER_LEN] = Default::default();
        let mut lookup = |s: ParamSymbol| -> Result<Rational> {
            if let Some(v) = &cache[s.index()] {
                return Ok(v.clone());
            }
            let v = assignment(s).ok_or(Error::MissingAssignment(s.name()))?;
            cache[s.index()] = Some(v.clone());
            Ok(v)
        };
        let mut den = <Rational as Coeff>::one();
        for (s, e) in self.den.symbols() {
            let v = lookup(s)?;
            if Coeff::is_zero(&v) {
                return Err(Error::ZeroDenominator(s.name()));
            }
            den = den * &Coeff::pow(&v, e as u32);
        }
        let mut total = <Rational as Coeff>::zero();
        for (m, c) in &self.num {
            let mut t = c.clone();
            for (s, e) in m.symbols() {
                t = t * &Coeff::pow(&lookup(s)?, e as u32);
            }
            total += &t;
        }
        Ok(total / &den)
    }

    /// Ring map on parameters: each symbol with an image is replaced by it.
    ///
    /// Fails when a denominator symbol is mapped to something that is not a
    /// monomial unit.
    pub fn substitute(&self, image: &dyn Fn(ParamSymbol) -> Option<ParamFraction>) -> Result<Self> {
        let mut images: [Option<ParamFraction>; ROSTER_LEN] = Default::default();
        for s in self.symbols().iter() {
            images[s.index()] = Some(
                image(s).unwrap_or_else(|| ParamFraction::symbol(s, self.invertible.contains(s))),
            );
        }
        let power = |s: ParamSymbol, e: u16| -> ParamFraction {
            Coeff::pow(images[s.index()].as_ref().unwrap(), e as u32)
        };
        let mut total = <ParamFraction as Coeff>::zero();
        for (m, c) in &self.num {
            let mut t = ParamFraction::constant(c.clone());
            for (s, e) in m.symbols() {
                t = t * &power(s, e);
            }
            total += &t;
        }
        let mut den = <ParamFraction as Coeff>::one();
        for (s, e) in self.den.symbols() {
            den = den * &power(s, e);
        }
        let inv = den.invert_monomial()?;
        Ok(total * &inv)
    }

    fn combine_invertible(&self, other: &Self) -> SymbolSet {
        self.invertible.union(other.invertible)
    }
}

fn add_term(acc: &mut BTreeMap<ParamMonomial, Rational>, m: ParamMonomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            if !Coeff::is_zero(&c) {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if Coeff::is_zero(o.get()) {
                o.remove();
            }
        }
    }
}

fn scale_num(
    num: &BTreeMap<ParamMonomial, Rational>,
    by: &ParamMonomial,
) -> BTreeMap<ParamMonomial, Rational> {
    if by.is_one() {
        return num.clone();
    }
    num.iter().map(|(m, c)| (m.mul(by), c.clone())).collect()
}

impl PartialEq for ParamFraction {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl Eq for ParamFraction {}

impl<'a> Add<&'a ParamFraction> for ParamFraction {
    type Output = ParamFraction;
    fn add(mut self, rhs: &'a ParamFraction) -> ParamFraction {
        self += rhs;
        self
    }
}

impl<'a> AddAssign<&'a ParamFraction> for ParamFraction {
    fn add_assign(&mut self, rhs: &'a ParamFraction) {
        self.invertible = self.combine_invertible(rhs);
        if rhs.num.is_empty() {
            return;
        }
        if self.num.is_empty() {
            self.num = rhs.num.clone();
            self.den = rhs.den;
            return;
        }
        if self.den == rhs.den {
            for (m, c) in &rhs.num {
                add_term(&mut self.num, *m, c.clone());
            }
            if self.den.is_one() {
                return;
            }
        } else {
            let l = self.den.lcm(&rhs.den);
            let mut num = scale_num(&self.num, &l.div(&self.den));
            for (m, c) in scale_num(&rhs.num, &l.div(&rhs.den)) {
                add_term(&mut num, m, c);
            }
            self.num = num;
            self.den = l;
        }
        let taken = std::mem::replace(self, <ParamFraction as Coeff>::zero());
        *self = taken.normalized();
    }
}

impl<'a> Sub<&'a ParamFraction> for ParamFraction {
    type Output = ParamFraction;
    fn sub(self, rhs: &'a ParamFraction) -> ParamFraction {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a ParamFraction> for ParamFraction {
    type Output = ParamFraction;
    fn mul(self, rhs: &'a ParamFraction) -> ParamFraction {
        let invertible = self.combine_invertible(rhs);
        if self.num.is_empty() || rhs.num.is_empty() {
            let mut z = <ParamFraction as Coeff>::zero();
            z.invertible = invertible;
            return z;
        }
        let mut num = BTreeMap::new();
        for (m1, c1) in &self.num {
            for (m2, c2) in &rhs.num {
                add_term(&mut num, m1.mul(m2), c1.clone() * c2);
            }
        }
        ParamFraction {
            num,
            den: self.den.mul(&rhs.den),
            invertible,
        }
        .normalized()
    }
}

impl Neg for ParamFraction {
    type Output = ParamFraction;
    fn neg(mut self) -> ParamFraction {
        for c in self.num.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Coeff for ParamFraction {
    fn zero() -> Self {
        ParamFraction {
            num: BTreeMap::new(),
            den: ParamMonomial::ONE,
            invertible: SymbolSet::EMPTY,
        }
    }

    fn one() -> Self {
        ParamFraction::constant(Rational::from_integer(1))
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num.len() == 1
            && self.num.get(&ParamMonomial::ONE).is_some_and(Coeff::is_one)
    }

    fn from_rational(q: &Rational) -> Self {
        ParamFraction::constant(q.clone())
    }

    fn from_param_fraction(p: &ParamFraction) -> Option<Self> {
        Some(p.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.invert_monomial().ok()
    }

    fn term_parts(&self) -> (bool, String) {
        if self.den.is_one() && self.num.len() == 1 {
            let (m, c) = self.num.iter().next().unwrap();
            let (neg, cmag) = c.term_parts();
            let mut s = String::new();
            let mut mono = String::new();
            m.write(&mut mono).unwrap();
            match (cmag.is_empty(), mono.is_empty()) {
                (true, true) => {}
                (true, false) => s.push_str(&mono),
                (false, true) => s.push_str(&cmag),
                (false, false) => {
                    s.push_str(&cmag);
                    s.push('*');
                    s.push_str(&mono);
                }
            }
            (neg, s)
        } else if self.num.len() == 1 {
            let (_, c) = self.num.iter().next().unwrap();
            if c.is_negative() {
                (true, format!("({})", (-self.clone()).canonical()))
            } else {
                (false, format!("({})", self.canonical()))
            }
        } else {
            (false, format!("({})", self.canonical()))
        }
    }

    fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ParamFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_empty() {
            return f.write_str("0");
        }
        let mut body = String::new();
        for (i, (m, c)) in self.num.iter().rev().enumerate() {
            let (neg, cmag) = c.term_parts();
            match (i, neg) {
                (0, true) => body.push('-'),
                (0, false) => {}
                (_, true) => body.push_str(" - "),
                (_, false) => body.push_str(" + "),
            }
            let mut mono = String::new();
            m.write(&mut mono)?;
            match (cmag.is_empty(), mono.is_empty()) {
                (true, true) => body.push('1'),
                (true, false) => body.push_str(&mono),
                (false, true) => body.push_str(&cmag),
                (false, false) => {
                    body.push_str(&cmag);
                    body.push('*');
                    body.push_str(&mono);
                }
            }
        }
        if self.den.is_one() {
            f.write_str(&body)
        } else {
            let mut den = String::new();
            self.den.write(&mut den)?;
            if self.num.len() > 1 {
                write!(f, "({body}) / {den}")
            } else {
                write!(f, "{body} / {den}")
            }
        }
    }
}

impl fmt::Debug for ParamFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParamSymbol::*;

    fn sym(s: ParamSymbol) -> ParamFraction {
        ParamFraction::symbol(s, true)
    }

    fn q(n: i64, d: i64) -> ParamFraction {
        ParamFraction::constant(Rational::new(n, d))
    }

    #[test]
    fn add_rationals() {
        assert_eq!(q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn monomial_denominator_product() {
        let c1_over_p = sym(C1) * &sym(P).invert_monomial().unwrap();
        let sq = c1_over_p.clone() * &c1_over_p;
        assert_eq!(sq.to_string(), "c1^2 / P^2");
    }

    #[test]
    fn cross_multiply_then_normalize() {
        // P*b1/c1 - T/c1 = (P*b1 - T)/c1
        let inv_c1 = sym(C1).invert_monomial().unwrap();
        let lhs = sym(P) * &sym(B1) * &inv_c1;
        let rhs = sym(T) * &inv_c1;
        let got = lhs + &(-rhs);
        let want = (sym(P) * &sym(B1) - &sym(T)) * &inv_c1;
        assert_eq!(got, want);
        assert_eq!(got.to_string(), "(b1*P - T) / c1");
    }

    #[test]
    fn invert_monomial_cases() {
        let p2 = sym(P) * &sym(P);
        assert_eq!(p2.invert_monomial().unwrap().to_string(), "1 / P^2");
        let four_c1 = q(4, 1) * &sym(C1);
        let inv = four_c1.invert_monomial().unwrap();
        assert_eq!(inv.to_string(), "1/4 / c1");
        assert_eq!(inv.numerator().len(), 1);
        assert!(matches!(
            (sym(P) + &sym(C1)).invert_monomial(),
            Err(Error::NotAMonomialUnit(_))
        ));
        let not_inv = ParamFraction::symbol(A1, false);
        assert!(not_inv.invert_monomial().is_err());
    }

    #[test]
    fn zero_has_trivial_denominator() {
        let p5 = sym(P).pow(5).invert_monomial().unwrap();
        let z = <ParamFraction as Coeff>::zero() * &p5;
        assert_eq!(z, <ParamFraction as Coeff>::zero());
        assert!(z.denominator().is_one());
        let diff = p5.clone() - &p5;
        assert_eq!(diff, <ParamFraction as Coeff>::zero());
    }

    #[test]
    fn u7_equals_u_times_u6() {
        assert_eq!(sym(U).pow(7), sym(U) * &sym(U).pow(6));
    }

    #[test]
    fn factored_square_identity() {
        // c2 := -c1^2/P, c3 := c1^3/P^2:
        // P^2 c3 + 2 P c1 c2 + c1^3 == (P c2 + c1^2)^2 / c1
        let p_inv = sym(P).invert_monomial().unwrap();
        let c2 = -(sym(C1).pow(2) * &p_inv);
        let c3 = sym(C1).pow(3) * &p_inv.pow(2);
        let lhs = sym(P).pow(2) * &c3 + &(q(2, 1) * &sym(P) * &sym(C1) * &c2) + &sym(C1).pow(3);
        let rhs = (sym(P) * &c2 + &sym(C1).pow(2)).pow(2) * &sym(C1).invert_monomial().unwrap();
        assert_eq!(lhs, rhs);
        // With a free c2 and c3 = c2^2/c1 the identity is non-trivial.
        let c2 = sym(C2);
        let c3 = c2.pow(2) * &sym(C1).invert_monomial().unwrap();
        let lhs = sym(P).pow(2) * &c3 + &(q(2, 1) * &sym(P) * &sym(C1) * &c2) + &sym(C1).pow(3);
        let rhs = (sym(P) * &c2 + &sym(C1).pow(2)).pow(2) * &sym(C1).invert_monomial().unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn evaluate_cases() {
        let x = sym(C1).pow(2) * &sym(P).invert_monomial().unwrap();
        let assign = |s: ParamSymbol| match s {
            C1 => Some(Rational::from_integer(3)),
            P => Some(Rational::from_integer(2)),
            _ => None,
        };
        assert_eq!(x.evaluate(&assign).unwrap(), Rational::new(9, 2));

        // T with T := c1^5/P^2 substituted, at c1 = P = 1.
        let t = sym(T)
            .substitute(&|s| {
                (s == T).then(|| sym(C1).pow(5) * &sym(P).pow(2).invert_monomial().unwrap())
            })
            .unwrap();
        let ones = |_| Some(Rational::from_integer(1));
        assert_eq!(t.evaluate(&ones).unwrap(), Rational::from_integer(1));

        let y = sym(C1) * &sym(P).invert_monomial().unwrap();
        let bad = |s: ParamSymbol| match s {
            C1 => Some(Rational::from_integer(1)),
            _ => Some(Rational::from_integer(0)),
        };
        assert!(matches!(y.evaluate(&bad), Err(Error::ZeroDenominator("P"))));
    }

    #[test]
    fn canonical_ordering() {
        let f = sym(C1) * &sym(C3) - &sym(C2).pow(2);
        assert_eq!(f.to_string(), "c1*c3 - c2^2");
        let g = -sym(A1) + &q(3, 2);
        assert_eq!(g.to_string(), "-a1 + 3/2");
    }

    #[test]
    fn substitution_rejects_non_unit_denominator() {
        let x = sym(P).invert_monomial().unwrap();
        let r = x.substitute(&|s| (s == P).then(|| sym(C1) + &sym(D3)));
        assert!(r.is_err());
    }
}
