use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::coeffs::Coeff;
use crate::error::{Error, Result};

use super::monomial::{gen, Degree, Monomial, Ring, WeightVector};

/// Products with more term pairs than this are split across threads.
const PAR_MUL_THRESHOLD: usize = 1 << 15;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<C> {
    pub monomial: Monomial,
    pub coeff: C,
}

/// Sparse polynomial keyed by exponent vector. No stored coefficient is zero.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C> {
    ring: Ring,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: Ring, c: C) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    /// The generator with the given index (0-based, `x1` is 0).
    pub fn var(ring: Ring, index: usize) -> Self {
        assert!(index < ring.ngens(), "generator {index} outside {ring:?}");
        Self::monomial(ring, Monomial::var(index, 1), C::one())
    }

    pub fn monomial(ring: Ring, m: Monomial, c: C) -> Self {
        assert!(ring == Ring::Six || m.is_three_var());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring, terms }
    }

    /// Builds from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            assert!(ring == Ring::Six || m.is_three_var());
            accumulate(&mut acc, m, c);
        }
        Polynomial { ring, terms: acc }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Terms in descending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter().rev()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, C> {
        self.terms
    }

    pub fn support(&self) -> BTreeSet<Monomial> {
        self.terms.keys().copied().collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, *m, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_assign_unchecked(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            accumulate(&mut self.terms, *m, c.clone());
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return large.mul_term(m, c);
        }
        let rhs: Vec<(&Monomial, &C)> = large.terms.iter().collect();
        let terms = if small.len() * large.len() > PAR_MUL_THRESHOLD {
            let lhs: Vec<(&Monomial, &C)> = small.terms.iter().collect();
            lhs.par_chunks(lhs.len().div_ceil(rayon::current_num_threads() * 4).max(1))
                .map(|chunk| {
                    let mut acc: HashMap<Monomial, C> = HashMap::new();
                    for (m1, c1) in chunk {
                        for (m2, c2) in &rhs {
                            accumulate_hash(&mut acc, m1.mul(m2), (*c1).clone() * c2);
                        }
                    }
                    acc
                })
                .reduce(HashMap::new, merge_hash)
        } else {
            let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(small.len() * 4);
            for (m1, c1) in &small.terms {
                for (m2, c2) in &rhs {
                    accumulate_hash(&mut acc, m1.mul(m2), c1.clone() * c2);
                }
            }
            acc
        };
        Polynomial {
            ring: self.ring,
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m2, c2)| (m.mul(m2), c2.clone() * c))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.clone() * k))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Ring-map image: generator `i` is replaced by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial<C>]) -> Result<Self> {
        if images.len() != self.ring.ngens() {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: if images.len() == 3 {
                    Ring::Three
                } else {
                    Ring::Six
                },
            });
        }
        let target = images.first().map(|p| p.ring).unwrap_or(self.ring);
        for p in images {
            if p.ring != target {
                return Err(Error::RingMismatch {
                    expected: target,
                    found: p.ring,
                });
            }
        }
        let mut cache = PowerCache::new(images);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut factors: Vec<&Polynomial<C>> = Vec::new();
            for (v, &e) in m.0.iter().enumerate().take(self.ring.ngens()) {
                if e > 0 {
                    cache.ensure(v, e);
                }
            }
            for (v, &e) in m.0.iter().enumerate().take(self.ring.ngens()) {
                if e > 0 {
                    factors.push(cache.get(v, e));
                }
            }
            factors.sort_by_key(|p| p.len());
            let mut prod = Polynomial::constant(target, c.clone());
            for f in factors {
                prod = prod.mul_unchecked(f);
            }
            out.add_assign_unchecked(&prod);
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to generator `var`.
    pub fn partial(&self, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[var] -= 1;
            accumulate(&mut terms, m2, c.clone() * &C::from_i64(e as i64));
        }
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn weighted_degree(&self, w: &WeightVector) -> Degree {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(w))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Leading term under the sixth cyclic lexicographic order.
    pub fn leading_term(&self) -> Result<Term<C>> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| Term {
                monomial: *m,
                coeff: c.clone(),
            })
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.ring, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map_coeffs<D: Coeff, E>(
        &self,
        f: impl Fn(&C) -> std::result::Result<D, E>,
    ) -> std::result::Result<Polynomial<D>, E> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    /// Reinterprets in another ring; fails when moving to three variables
    /// with a `t` generator present.
    pub fn to_ring(&self, ring: Ring) -> Result<Self> {
        if ring == Ring::Three && !self.terms.keys().all(Monomial::is_three_var) {
            return Err(Error::RingMismatch {
                expected: Ring::Three,
                found: self.ring,
            });
        }
        Ok(Polynomial {
            ring,
            terms: self.terms.clone(),
        })
    }

    /// Canonical text: terms descending, `coeff*x1^e1*...`, zero exponents
    /// omitted.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Determinant of the Jacobian of `(h1, h2, h3)` in `(x1, x2, x3)`.
pub fn jacobian_det3<C: Coeff>(
    h1: &Polynomial<C>,
    h2: &Polynomial<C>,
    h3: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    for h in [h1, h2, h3] {
        if h.ring != Ring::Three {
            return Err(Error::RingMismatch {
                expected: Ring::Three,
                found: h.ring,
            });
        }
    }
    let j: Vec<Vec<Polynomial<C>>> = [h1, h2, h3]
        .iter()
        .map(|h| (0..3).map(|v| h.partial(v)).collect())
        .collect();
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| -> Polynomial<C> {
        &(&j[r1][c1] * &j[r2][c2]) - &(&j[r1][c2] * &j[r2][c1])
    };
    // cofactor expansion along the last row
    let t0 = &j[2][0] * &minor(0, 1, 1, 2);
    let t1 = &j[2][1] * &minor(0, 1, 0, 2);
    let t2 = &j[2][2] * &minor(0, 1, 0, 1);
    Ok(&(&t0 - &t1) + &t2)
}

fn accumulate<C: Coeff>(acc: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn accumulate_hash<C: Coeff>(acc: &mut HashMap<Monomial, C>, m: Monomial, c: C) {
    use std::collections::hash_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
        }
    }
}

fn merge_hash<C: Coeff>(
    mut a: HashMap<Monomial, C>,
    b: HashMap<Monomial, C>,
) -> HashMap<Monomial, C> {
    if a.len() < b.len() {
        return merge_hash(b, a);
    }
    for (m, c) in b {
        accumulate_hash(&mut a, m, c);
    }
    a
}

/// Lazily computed powers of substitution images.
struct PowerCache<'a, C> {
    images: &'a [Polynomial<C>],
    powers: Vec<Vec<Polynomial<C>>>,
}

impl<'a, C: Coeff> PowerCache<'a, C> {
    fn new(images: &'a [Polynomial<C>]) -> Self {
        PowerCache {
            images,
            powers: images.iter().map(|p| vec![p.clone()]).collect(),
        }
    }

    fn ensure(&mut self, v: usize, e: u32) {
        let list = &mut self.powers[v];
        while list.len() < e as usize {
            let next = list.last().unwrap().mul_unchecked(&self.images[v]);
            list.push(next);
        }
    }

    fn get(&self, v: usize, e: u32) -> &Polynomial<C> {
        &self.powers[v][e as usize - 1]
    }
}

impl<C: Coeff> std::ops::Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl<C: Coeff> std::ops::Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl<C: Coeff> std::ops::Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl<C: Coeff> std::ops::Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.term_parts();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (mag.is_empty(), m.is_one()) {
                (true, true) => f.write_str("1")?,
                (true, false) => m.write(f)?,
                (false, true) => f.write_str(&mag)?,
                (false, false) => {
                    f.write_str(&mag)?;
                    f.write_str("*")?;
                    m.write(f)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.ring, self)
    }
}

/// Shorthand for the six-variable generators.
pub fn six<C: Coeff>(index: usize) -> Polynomial<C> {
    Polynomial::var(Ring::Six, index)
}

/// Shorthand for the three-variable generators.
pub fn three<C: Coeff>(index: usize) -> Polynomial<C> {
    Polynomial::var(Ring::Three, index)
}

#[allow(dead_code)]
const _: () = assert!(gen::TG == 5);
