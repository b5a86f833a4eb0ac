//! Degree classes `P(γ, δ)`: nonzero six-variable polynomials with
//! `deg_w1 <= γ`, `deg_w2 <= δ` and leading term a nonzero multiple of
//! `tf^δ tg^γ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coeffs::{Coeff, Rational};
use crate::derivation::Endomorphism;
use crate::error::{Error, Result};
use crate::objects::{phi_prime, AffineType};
use crate::poly::{gen, Degree, Monomial, Polynomial, Ring, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(u64, u64)", from = "(u64, u64)")]
pub struct ClassIndex {
    pub gamma: u64,
    pub delta: u64,
}

impl ClassIndex {
    pub fn new(gamma: u64, delta: u64) -> Self {
        ClassIndex { gamma, delta }
    }

    /// `tf^δ tg^γ`.
    pub fn monomial(&self) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[gen::TF] = self.delta as u32;
        m.0[gen::TG] = self.gamma as u32;
        m
    }

    /// Total degree of `π` applied to any class member.
    pub fn pi_degree(&self) -> u64 {
        5 * self.gamma + 2 * self.delta
    }
}

impl From<ClassIndex> for (u64, u64) {
    fn from(c: ClassIndex) -> Self {
        (c.gamma, c.delta)
    }
}

impl From<(u64, u64)> for ClassIndex {
    fn from((gamma, delta): (u64, u64)) -> Self {
        ClassIndex { gamma, delta }
    }
}

impl std::fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.gamma, self.delta)
    }
}

/// Classified indices `(m4, n4)`, `(m5, n5)`, `(m6, n6)` of the images of
/// `tr`, `tf`, `tg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[[u64; 3]; 2]", from = "[[u64; 3]; 2]")]
pub struct CWitness {
    pub m: [u64; 3],
    pub n: [u64; 3],
}

impl CWitness {
    pub fn new(m: [u64; 3], n: [u64; 3]) -> Self {
        CWitness { m, n }
    }

    pub fn from_classes(r: ClassIndex, f: ClassIndex, g: ClassIndex) -> Self {
        CWitness {
            m: [r.gamma, f.gamma, g.gamma],
            n: [r.delta, f.delta, g.delta],
        }
    }

    /// Inequalities (c2) and (c3) for an affine type.
    pub fn accepts(&self, ty: AffineType) -> bool {
        let [g1, g2, g3] = ty.0.map(u64::from);
        let [m4, _, m6] = self.m;
        let [n4, n5, n6] = self.n;
        if n4 < 1 || n5 < 1 || n6 < 1 {
            return false;
        }
        let c2 = m6 >= g1 && 2 * m6 >= g2 && 3 * m6 >= g3 && m6 >= m4;
        let k = n6 - 1;
        let c3 = k >= g1 + 1 && 2 * k >= g2 + 1 && 3 * k >= g3 + 1 && k >= n4;
        c2 && c3
    }
}

impl From<CWitness> for [[u64; 3]; 2] {
    fn from(w: CWitness) -> Self {
        [w.m, w.n]
    }
}

impl From<[[u64; 3]; 2]> for CWitness {
    fn from([m, n]: [[u64; 3]; 2]) -> Self {
        CWitness { m, n }
    }
}

impl std::fmt::Display for CWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [m4, m5, m6] = self.m;
        let [n4, n5, n6] = self.n;
        write!(f, "({m4},{m5},{m6}; {n4},{n5},{n6})")
    }
}

/// `(m5 δ + m6 γ, n5 δ + n6 γ)`.
pub fn compose_class_bound(w: &CWitness, idx: ClassIndex) -> ClassIndex {
    ClassIndex {
        gamma: w.m[1] * idx.delta + w.m[2] * idx.gamma,
        delta: w.n[1] * idx.delta + w.n[2] * idx.gamma,
    }
}

fn deg(d: Degree) -> u64 {
    d.finite().unwrap_or(0)
}

/// The index read off the leading term, when `p` belongs to that class.
pub fn classify<C: Coeff>(p: &Polynomial<C>) -> Result<Option<ClassIndex>> {
    let lt = p.leading_term()?;
    let m = lt.monomial;
    if m.0[..gen::TF].iter().any(|&e| e != 0) || m.0[gen::TF] == 0 {
        return Ok(None);
    }
    let idx = ClassIndex::new(m.0[gen::TG] as u64, m.0[gen::TF] as u64);
    if deg(p.weighted_degree(&WeightVector::W1)) <= idx.gamma
        && deg(p.weighted_degree(&WeightVector::W2)) <= idx.delta
    {
        Ok(Some(idx))
    } else {
        Ok(None)
    }
}

pub fn in_class<C: Coeff>(p: &Polynomial<C>, idx: ClassIndex) -> bool {
    if idx.delta < 1 || p.ring() != Ring::Six {
        return false;
    }
    matches!(classify(p), Ok(Some(c)) if c == idx)
}

/// Classes of the images of `tr`, `tf`, `tg` under `ψ`, as a witness when
/// all three classify.
pub fn witness_from_images<C: Coeff>(
    r: &Polynomial<C>,
    f: &Polynomial<C>,
    g: &Polynomial<C>,
) -> Option<CWitness> {
    let c = |p| classify(p).ok().flatten();
    Some(CWitness::from_classes(c(r)?, c(f)?, c(g)?))
}

/// Condition (C) for `φ'_u ∘ lift`: the classified witness if it passes
/// (c2) and (c3).
pub fn condition_c<C: Coeff>(lift: &Endomorphism<C>, u: &C, ty: AffineType) -> Option<CWitness> {
    let psi = phi_prime(u).compose(lift).ok()?;
    let w = witness_from_images(psi.image(gen::TR), psi.image(gen::TF), psi.image(gen::TG))?;
    w.accepts(ty).then_some(w)
}

/// Class of `ψ(p)` decided without expanding `ψ(p)`.
///
/// Uses two exact facts: leading terms multiply (the order is a monomial
/// order and coefficients form a domain), and weighted degrees add under
/// products while only dropping under sums. So `lt(ψ(p))` is the sum of the
/// top products `c_m lt(ψ(m))` whenever that sum is nonzero, and the
/// weighted degrees of `ψ(p)` are bounded by the largest term-wise values.
/// Returns `None` when the top products cancel.
pub fn certify_image<C: Coeff>(
    psi: &Endomorphism<C>,
    p: &Polynomial<C>,
) -> Result<Option<CertifiedClass<C>>> {
    if psi.source() != Ring::Six || p.ring() != Ring::Six {
        return Err(Error::RingMismatch {
            expected: Ring::Six,
            found: p.ring(),
        });
    }
    let mut lts = Vec::with_capacity(6);
    let mut w1 = [0u64; 6];
    let mut w2 = [0u64; 6];
    for v in 0..6 {
        let img = psi.image(v);
        lts.push(img.leading_term()?);
        w1[v] = deg(img.weighted_degree(&WeightVector::W1));
        w2[v] = deg(img.weighted_degree(&WeightVector::W2));
    }
    let (mut d1, mut d2) = (0, 0);
    let mut top: Option<(Monomial, C)> = None;
    for (m, c) in p.iter() {
        let mut mono = Monomial::ONE;
        let mut coeff = c.clone();
        let (mut e1, mut e2) = (0, 0);
        for v in 0..6 {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            for _ in 0..e {
                mono = mono.checked_mul(&lts[v].monomial)?;
            }
            coeff = coeff * &lts[v].coeff.pow(e);
            e1 += e as u64 * w1[v];
            e2 += e as u64 * w2[v];
        }
        d1 = d1.max(e1);
        d2 = d2.max(e2);
        top = match top {
            None => Some((mono, coeff)),
            Some((tm, _)) if mono > tm => Some((mono, coeff)),
            Some((tm, tc)) if mono == tm => Some((tm, tc + &coeff)),
            keep => keep,
        };
    }
    let Some((mono, coeff)) = top else {
        return Err(Error::ZeroPolynomial);
    };
    if coeff.is_zero() {
        return Ok(None);
    }
    Ok(Some(CertifiedClass {
        lt: mono,
        lt_coeff: coeff,
        w1_bound: d1,
        w2_bound: d2,
    }))
}

/// Exact leading term and weighted-degree upper bounds of an image.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedClass<C> {
    pub lt: Monomial,
    pub lt_coeff: C,
    pub w1_bound: u64,
    pub w2_bound: u64,
}

impl<C: Coeff> CertifiedClass<C> {
    /// The class the image belongs to, if the bounds and leading term pin
    /// one down.
    pub fn class(&self) -> Option<ClassIndex> {
        let m = self.lt;
        if m.0[..gen::TF].iter().any(|&e| e != 0) || m.0[gen::TF] == 0 {
            return None;
        }
        let idx = ClassIndex::new(m.0[gen::TG] as u64, m.0[gen::TF] as u64);
        (self.w1_bound <= idx.gamma && self.w2_bound <= idx.delta).then_some(idx)
    }
}

/// Nonzero rational `±p/q` with `1 <= p, q <= bound`.
pub fn small_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    let n = rng.gen_range(1..=bound);
    let d = rng.gen_range(1..=bound);
    let r = Rational::new(n, d);
    if rng.gen_bool(0.5) {
        -r
    } else {
        r
    }
}

/// Exponent vectors allowed below the leading term of a class member.
fn random_support(rng: &mut impl Rng, idx: ClassIndex) -> Monomial {
    let (g, d) = (idx.gamma as u32, idx.delta as u32);
    let pick_a = g == 0 || rng.gen_bool(0.25);
    let mut e = [0u32; 6];
    if pick_a {
        e[gen::TF] = rng.gen_range(0..d);
        e[gen::TG] = g;
        return Monomial(e);
    }
    e[gen::TG] = rng.gen_range(0..g);
    e[gen::TF] = rng.gen_range(0..=d);
    let mut room = g - e[gen::TG];
    // weights 1, 2, 3, 1 on x1, x2, x3, tr
    for _ in 0..4 {
        if room == 0 {
            break;
        }
        let v = [gen::X1, gen::X2, gen::X3, gen::TR][rng.gen_range(0..4)];
        let w = [1, 2, 3, 1, 0, 0][v];
        if w <= room {
            let k = rng.gen_range(0..=room / w);
            e[v] += k;
            room -= k * w;
        }
    }
    Monomial(e)
}

/// Random member of `P(γ, δ)` with up to `budget` lower terms.
pub fn random_class_element(
    idx: ClassIndex,
    seed: u64,
    budget: usize,
) -> Result<Polynomial<Rational>> {
    if idx.delta < 1 {
        return Err(Error::CaseConstraintViolated(
            "class index needs δ >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = vec![(idx.monomial(), small_rational(&mut rng, 7))];
    let extra = if budget == 0 {
        0
    } else {
        rng.gen_range(0..=budget)
    };
    for _ in 0..extra {
        let m = random_support(&mut rng, idx);
        terms.push((m, small_rational(&mut rng, 7)));
    }
    // no lower support equals tf^δ tg^γ, so the leading term survives
    Ok(Polynomial::from_terms(Ring::Six, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn q(s: &str) -> Polynomial<Rational> {
        parse(s, Ring::Six).unwrap()
    }

    #[test]
    fn basic_classification() {
        assert_eq!(classify(&q("tf")).unwrap(), Some(ClassIndex::new(0, 1)));
        assert_eq!(classify(&q("x1")).unwrap(), None);
        assert_eq!(classify(&q("tg")).unwrap(), None);
        assert!(classify(&q("0")).is_err());
    }

    #[test]
    fn lower_terms_allowed() {
        assert!(in_class(&q("tf^2*tg^2 + x1^2"), ClassIndex::new(2, 2)));
        assert!(!in_class(&q("tf^2*tg^2 + x1^3"), ClassIndex::new(2, 2)));
        assert!(!in_class(&q("tf^2*tg^2 + tf^3"), ClassIndex::new(2, 2)));
    }

    #[test]
    fn witness_bounds() {
        let w = CWitness::new([8, 6, 15], [11, 8, 20]);
        assert!(w.accepts(AffineType([3, 2, 3])));
        assert_eq!(
            compose_class_bound(&w, ClassIndex::new(3, 4)),
            ClassIndex::new(69, 92)
        );
        let w = CWitness::new([5, 3, 7], [8, 4, 12]);
        assert!(w.accepts(AffineType([3, 3, 3])));
        assert_eq!(
            compose_class_bound(&w, ClassIndex::new(3, 4)),
            ClassIndex::new(33, 52)
        );
        assert_eq!(
            compose_class_bound(&w, ClassIndex::new(0, 1)),
            ClassIndex::new(3, 4)
        );
        assert!(!CWitness::new([5, 3, 4], [8, 4, 12]).accepts(AffineType([3, 3, 3])));
    }

    #[test]
    fn random_elements_are_members() {
        for seed in 0..200 {
            let idx = ClassIndex::new(seed % 4, 1 + seed % 3);
            let p = random_class_element(idx, seed, 12).unwrap();
            assert!(in_class(&p, idx), "{p}");
        }
        let p = random_class_element(ClassIndex::new(2, 3), 9, 0).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn certificate_matches_expansion() {
        let psi = phi_prime(&Rational::from(3));
        for seed in 0..20 {
            let idx = ClassIndex::new(1 + seed % 3, 1 + seed % 2);
            let p = random_class_element(idx, seed, 8).unwrap();
            let q = psi.apply(&p).unwrap();
            let cert = certify_image(&psi, &p).unwrap().unwrap();
            let lt = q.leading_term().unwrap();
            assert_eq!((cert.lt, cert.lt_coeff.clone()), (lt.monomial, lt.coeff));
            assert!(deg(q.weighted_degree(&WeightVector::W1)) <= cert.w1_bound);
            assert_eq!(cert.class(), classify(&q).unwrap());
        }
    }

    #[test]
    fn cancelling_top_terms_are_undecided() {
        let psi = Endomorphism::<Rational>::identity(Ring::Six);
        let p = q("tf*tg + x1");
        assert!(certify_image(&psi, &p).unwrap().is_some());
        // identity keeps distinct monomials distinct, so force a tie by hand
        let mut imgs = psi.into_images();
        imgs[gen::X1] = q("tf*tg");
        let psi = Endomorphism::new(Ring::Six, Ring::Six, imgs).unwrap();
        assert_eq!(certify_image(&psi, &q("tf*tg - x1")).unwrap(), None);
    }

    #[test]
    fn unit_class_supports() {
        // for (1,1) the lower supports are tg, and x1, tr, constants times tf^{0,1}
        let mut seen = std::collections::BTreeSet::new();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            seen.insert(random_support(&mut rng, ClassIndex::new(1, 1)).0);
        }
        let allowed: std::collections::BTreeSet<[u32; 6]> = [
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [1, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 1, 0],
        ]
        .into_iter()
        .collect();
        assert_eq!(seen, allowed);
    }
}
