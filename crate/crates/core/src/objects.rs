//! The concrete polynomials, derivations and maps the harness works with.
//!
//! `f = x1*x3 - x2^2`, `r = x2*f + x1^2`, `g = x3*f^2 + 2*x1*x2*f + x1^3`,
//! `Δ(h) = det ∂(f, g, h)/∂(x1, x2, x3)`, its triangular six-variable
//! counterpart `Δ'`, the flows `φ_u = exp(uΔ)` and `φ'_u = exp(uΔ')`, the
//! scalings `β_u`, the substitution `π`, affine maps and their lifts.

use serde::Serialize;

use crate::coeffs::Coeff;
use crate::derivation::{Derivation, Endomorphism, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::poly::{gen, jacobian_det3, Polynomial, Ring};

type Poly<C> = Polynomial<C>;

fn x<C: Coeff>(ring: Ring, i: usize) -> Poly<C> {
    Polynomial::var(ring, i)
}

fn k<C: Coeff>(ring: Ring, c: C) -> Poly<C> {
    Polynomial::constant(ring, c)
}

fn int<C: Coeff>(ring: Ring, n: i64) -> Poly<C> {
    Polynomial::constant(ring, C::from_i64(n))
}

/// `(f, r, g)` in the given ring (written in `x1, x2, x3` only).
pub fn base_polys_in<C: Coeff>(ring: Ring) -> (Poly<C>, Poly<C>, Poly<C>) {
    let (x1, x2, x3) = (x(ring, 0), x(ring, 1), x(ring, 2));
    let f = &(&x1 * &x3) - &x2.pow(2);
    let r = &(&x2 * &f) + &x1.pow(2);
    let g = &(&(&x3 * &f.pow(2)) + &(&int(ring, 2) * &(&(&x1 * &x2) * &f))) + &x1.pow(3);
    (f, r, g)
}

pub fn base_polys<C: Coeff>() -> (Poly<C>, Poly<C>, Poly<C>) {
    base_polys_in(Ring::Three)
}

/// The Jacobian derivation `h ↦ det ∂(f, g, h)/∂(x1, x2, x3)`.
pub fn delta<C: Coeff>() -> Derivation<C> {
    let (f, _, g) = base_polys::<C>();
    let images = (0..3)
        .map(|i| jacobian_det3(&f, &g, &x(Ring::Three, i)).expect("three-variable inputs"))
        .collect();
    Derivation::new(images).expect("three images")
}

/// `Δ'`: `x1 ↦ -2 tr tf`, `x2 ↦ 4 x1 tr - tg`, `x3 ↦ 6 x2 tr + 2 tf^2`,
/// `tr ↦ -tf tg`, `tf, tg ↦ 0`.
pub fn delta_prime<C: Coeff>() -> Derivation<C> {
    let s = Ring::Six;
    let (x1, x2) = (x::<C>(s, gen::X1), x::<C>(s, gen::X2));
    let (tr, tf, tg) = (x::<C>(s, gen::TR), x::<C>(s, gen::TF), x::<C>(s, gen::TG));
    let images = vec![
        &int(s, -2) * &(&tr * &tf),
        &(&int(s, 4) * &(&x1 * &tr)) - &tg,
        &(&int(s, 6) * &(&x2 * &tr)) + &(&int(s, 2) * &tf.pow(2)),
        -&(&tf * &tg),
        Polynomial::zero(s),
        Polynomial::zero(s),
    ];
    Derivation::new(images).expect("six images")
}

pub fn phi<C: Coeff>(u: &C) -> Endomorphism<C> {
    delta::<C>()
        .exp_endomorphism(u, DEFAULT_CAP)
        .expect("Δ is locally nilpotent")
}

pub fn phi_prime<C: Coeff>(u: &C) -> Endomorphism<C> {
    delta_prime::<C>()
        .exp_endomorphism(u, DEFAULT_CAP)
        .expect("Δ' is locally nilpotent")
}

/// Weights of the scaling `β_u` on `(x1, x2, x3, tr, tf, tg)`.
pub const BETA_WEIGHTS: [u32; 6] = [3, 2, 1, 6, 4, 9];

/// `β_u = (u^3 x1, u^2 x2, u x3)`, extended by `u^6 tr, u^4 tf, u^9 tg` in
/// six variables.
pub fn beta_in<C: Coeff>(u: &C, ring: Ring) -> Result<Endomorphism<C>> {
    if u.try_inverse().is_none() {
        return Err(Error::NonInvertibleScale);
    }
    let images = (0..ring.ngens())
        .map(|i| &k(ring, u.pow(BETA_WEIGHTS[i])) * &x(ring, i))
        .collect();
    Endomorphism::new(ring, ring, images)
}

pub fn beta<C: Coeff>(u: &C) -> Result<Endomorphism<C>> {
    beta_in(u, Ring::Three)
}

pub fn beta_inverse<C: Coeff>(u: &C, ring: Ring) -> Result<Endomorphism<C>> {
    let inv = u.try_inverse().ok_or(Error::NonInvertibleScale)?;
    beta_in(&inv, ring)
}

/// `π`: `x_i ↦ x_i`, `tr ↦ r`, `tf ↦ f`, `tg ↦ g`.
pub fn pi_map<C: Coeff>() -> Endomorphism<C> {
    let (f, r, g) = base_polys::<C>();
    let t = Ring::Three;
    Endomorphism::new(Ring::Six, t, vec![x(t, 0), x(t, 1), x(t, 2), r, f, g]).unwrap()
}

/// `x_j ↦ a_j x1 + b_j x2 + c_j x3 + d_j`; `matrix[i][j]` is the coefficient
/// of `x_{i+1}` in the image of `x_{j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<C> {
    pub matrix: [[C; 3]; 3],
    pub translation: [C; 3],
}

/// `(P, Q, S, T)` with `P = c1 d3 - 2 c2 d2 + c3 d1` (likewise `Q` on the
/// b row and `S` on the a row) and `T = P b1 - Q c1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedParams<C> {
    pub p: C,
    pub q: C,
    pub s: C,
    pub t: C,
}

/// Largest row index carrying a nonzero entry, per column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffineType(pub [u8; 3]);

impl<C: Coeff> AffineMap<C> {
    pub fn new(matrix: [[C; 3]; 3], translation: [C; 3]) -> Self {
        AffineMap {
            matrix,
            translation,
        }
    }

    pub fn identity() -> Self {
        let e = |i: usize, j: usize| if i == j { C::one() } else { C::zero() };
        AffineMap {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| e(i, j))),
            translation: std::array::from_fn(|_| C::zero()),
        }
    }

    /// Diagonal `(u^3, u^2, u)`.
    pub fn scaling(u: &C) -> Self {
        let mut m = Self::identity();
        for i in 0..3 {
            m.matrix[i][i] = u.pow(3 - i as u32);
        }
        m
    }

    pub fn a(&self, j: usize) -> &C {
        &self.matrix[0][j - 1]
    }

    pub fn b(&self, j: usize) -> &C {
        &self.matrix[1][j - 1]
    }

    pub fn c(&self, j: usize) -> &C {
        &self.matrix[2][j - 1]
    }

    pub fn d(&self, j: usize) -> &C {
        &self.translation[j - 1]
    }

    pub fn determinant(&self) -> C {
        let m = &self.matrix;
        let t = |i: usize, j: usize, k: usize| m[0][i].clone() * &m[1][j] * &m[2][k];
        t(0, 1, 2) + &t(1, 2, 0) + &t(2, 0, 1) - &t(2, 1, 0) - &t(0, 2, 1) - &t(1, 0, 2)
    }

    /// Image of `x_j` (0-based) in the given ring.
    pub fn image(&self, j: usize, ring: Ring) -> Poly<C> {
        let mut terms = Vec::with_capacity(4);
        for i in 0..3 {
            terms.push((crate::poly::Monomial::var(i, 1), self.matrix[i][j].clone()));
        }
        terms.push((crate::poly::Monomial::ONE, self.translation[j].clone()));
        Polynomial::from_terms(ring, terms)
    }

    pub fn to_endomorphism(&self, ring: Ring) -> Endomorphism<C> {
        Endomorphism::new(
            Ring::Three,
            ring,
            (0..3).map(|j| self.image(j, ring)).collect(),
        )
        .unwrap()
    }

    fn row_form(&self, row: usize) -> C {
        let m = &self.matrix[row];
        let d = &self.translation;
        m[0].clone() * &d[2] - &(C::from_i64(2) * &m[1] * &d[1]) + &(m[2].clone() * &d[0])
    }

    pub fn derived_params(&self) -> DerivedParams<C> {
        let p = self.row_form(2);
        let q = self.row_form(1);
        let s = self.row_form(0);
        let t = p.clone() * self.b(1) - &(q.clone() * self.c(1));
        DerivedParams { p, q, s, t }
    }

    /// `a1 c3 - 2 a2 c2 + a3 c1`, the coefficient of `tf` in `α̂(tf)`.
    pub fn tf_scale(&self) -> C {
        self.a(1).clone() * self.c(3) - &(C::from_i64(2) * self.a(2) * self.c(2))
            + &(self.a(3).clone() * self.c(1))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> AffineMap<D> {
        AffineMap {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.matrix[i][j]))),
            translation: std::array::from_fn(|j| f(&self.translation[j])),
        }
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<AffineMap<D>> {
        let mut m: Vec<D> = Vec::with_capacity(12);
        for row in &self.matrix {
            for e in row {
                m.push(f(e)?);
            }
        }
        for e in &self.translation {
            m.push(f(e)?);
        }
        Ok(AffineMap {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| m[3 * i + j].clone())),
            translation: std::array::from_fn(|j| m[9 + j].clone()),
        })
    }
}

#[derive(Serialize)]
struct AffineText {
    matrix: [[String; 3]; 3],
    translation: [String; 3],
}

impl<C: Coeff> Serialize for AffineMap<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AffineText {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| self.matrix[i][j].canonical())),
            translation: std::array::from_fn(|j| self.translation[j].canonical()),
        }
        .serialize(s)
    }
}

/// Type of `α`. A pivot counts as nonzero only when it is a unit of the
/// coefficient field; other nonzero pivots are undecidable.
pub fn affine_type<C: Coeff>(
    alpha: &AffineMap<C>,
    claimed: Option<AffineType>,
) -> Result<AffineType> {
    let mut ty = [0u8; 3];
    for (j, t) in ty.iter_mut().enumerate() {
        let pivot = (0..3).rev().find(|&i| !alpha.matrix[i][j].is_zero());
        let Some(i) = pivot else {
            return Err(Error::TypeMismatch {
                claimed: claimed.map_or([0; 3], |c| c.0),
                reason: format!("column {} is zero", j + 1),
            });
        };
        if alpha.matrix[i][j].try_inverse().is_none() {
            return Err(Error::UndecidableNonzero(alpha.matrix[i][j].canonical()));
        }
        *t = i as u8 + 1;
    }
    if let Some(c) = claimed {
        if c.0 != ty {
            return Err(Error::TypeMismatch {
                claimed: c.0,
                reason: format!("matrix has type {ty:?}"),
            });
        }
    }
    Ok(AffineType(ty))
}

/// Whether `α = β_u` for some unit `u`; returns that `u`.
pub fn in_b<C: Coeff>(alpha: &AffineMap<C>) -> Option<C> {
    if alpha.translation.iter().any(|d| !d.is_zero()) {
        return None;
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j && !alpha.matrix[i][j].is_zero() {
                return None;
            }
        }
    }
    let u = alpha.c(3).clone();
    u.try_inverse()?;
    if *alpha.b(2) == u.pow(2) && *alpha.a(1) == u.pow(3) {
        Some(u)
    } else {
        None
    }
}

/// The lift `α̂` of an affine map to six variables.
pub fn hat_lift<C: Coeff>(alpha: &AffineMap<C>) -> Endomorphism<C> {
    let s = Ring::Six;
    let (y1, y2, y3) = (alpha.image(0, s), alpha.image(1, s), alpha.image(2, s));
    let (f, _, _) = base_polys_in::<C>(s);
    let tf_minus_f = &x::<C>(s, gen::TF) - &f;
    let hf = &(&(&y1 * &y3) - &y2.pow(2)) + &tf_minus_f.scale(&alpha.tf_scale());
    let hr = &(&y2 * &hf) + &y1.pow(2);
    let hg = &(&(&y3 * &hf.pow(2)) + &(&int(s, 2) * &(&(&y1 * &y2) * &hf))) + &y1.pow(3);
    Endomorphism::new(s, s, vec![y1, y2, y3, hr, hf, hg]).unwrap()
}

/// Lifts that correct `α̂` by elements of `ker π` in special cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModifiedLift {
    /// Type `(1, 2, 3)` with `b2 = c3^2`, `a1 = c3^3`, `2 a2 = b3 c3`,
    /// `a1 a3 = a2^2` and zero translation.
    TypeOneTwoThree,
    /// Type `(3, 3, 3)` with every quadratic `x`-coefficient of `α̂(tf)`
    /// vanishing, `P c2 + c1^2 = 0`, `a1 a3 = a2^2` and
    /// `P^2 b2 + 2 P b1 c1 - Q c1^2 = 0`, with `P` a unit.
    TypeThreeThreeThree,
}

fn require<C: Coeff>(what: &str, value: C) -> Result<()> {
    if value.is_zero() {
        Ok(())
    } else {
        Err(Error::CaseConstraintViolated(format!(
            "{what} = {}",
            value.canonical()
        )))
    }
}

pub fn modified_lift<C: Coeff>(
    alpha: &AffineMap<C>,
    case: ModifiedLift,
) -> Result<Endomorphism<C>> {
    let s = Ring::Six;
    let hat = hat_lift(alpha);
    let (x1, x2, x3) = (x::<C>(s, 0), x::<C>(s, 1), x::<C>(s, 2));
    let (tr, tf, tg) = (x::<C>(s, gen::TR), x::<C>(s, gen::TF), x::<C>(s, gen::TG));
    let (a, b, c, d) = (
        |j| alpha.a(j).clone(),
        |j| alpha.b(j).clone(),
        |j| alpha.c(j).clone(),
        |j| alpha.d(j).clone(),
    );
    let two = C::from_i64(2);
    let mut images = hat.into_images();
    match case {
        ModifiedLift::TypeOneTwoThree => {
            for (name, v) in [
                ("c1", c(1)),
                ("c2", c(2)),
                ("b1", b(1)),
                ("d1", d(1)),
                ("d2", d(2)),
                ("d3", d(3)),
            ] {
                require(name, v)?;
            }
            let c3 = c(3);
            require("b2 - c3^2", b(2) - &c3.pow(2))?;
            require("a1 - c3^3", a(1) - &c3.pow(3))?;
            require("2*a2 - b3*c3", two.clone() * &a(2) - &(b(3) * &c3))?;
            require("a1*a3 - a2^2", a(1) * &a(3) - &a(2).pow(2))?;
            let r_lin = &(&x2 * &tf) + &x1.pow(2);
            let g_lin = &(&(&x3 * &tf.pow(2)) + &(&int(s, 2) * &(&(&x1 * &x2) * &tf))) + &x1.pow(3);
            let corr_g = &(&tf * &(&tr - &r_lin)).scale(&(b(3) * &c3.pow(8)))
                + &(&tg - &g_lin).scale(&c3.pow(9));
            let corr_r = (&tr - &r_lin).scale(&c3.pow(6));
            images[gen::TG] = &images[gen::TG] + &corr_g;
            images[gen::TR] = &images[gen::TR] + &corr_r;
        }
        ModifiedLift::TypeThreeThreeThree => {
            let dp = alpha.derived_params();
            let p_inv = dp.p.try_inverse().ok_or_else(|| {
                Error::CaseConstraintViolated(format!("P = {} is not a unit", dp.p.canonical()))
            })?;
            require("c1*c3 - c2^2", c(1) * &c(3) - &c(2).pow(2))?;
            require(
                "b1*c3 - 2*b2*c2 + b3*c1",
                b(1) * &c(3) - &(two.clone() * &b(2) * &c(2)) + &(b(3) * &c(1)),
            )?;
            require(
                "a1*c3 - 2*a2*c2 + a3*c1 + b1*b3 - b2^2",
                alpha.tf_scale() + &(b(1) * &b(3)) - &b(2).pow(2),
            )?;
            require(
                "a1*b3 - 2*a2*b2 + a3*b1",
                a(1) * &b(3) - &(two.clone() * &a(2) * &b(2)) + &(a(3) * &b(1)),
            )?;
            require("P*c2 + c1^2", dp.p.clone() * &c(2) + &c(1).pow(2))?;
            require("a1*a3 - a2^2", a(1) * &a(3) - &a(2).pow(2))?;
            require(
                "P^2*b2 + 2*P*b1*c1 - Q*c1^2",
                dp.p.pow(2) * &b(2) + &(two * &dp.p * &b(1) * &c(1))
                    - &(dp.q.clone() * &c(1).pow(2)),
            )?;
            let (f, _, _) = base_polys_in::<C>(s);
            let k = dp.t.pow(2) * &p_inv.pow(2);
            let tf_minus_f = &tf - &f;
            let corr_g = (&x3 * &tf_minus_f).scale(&(k.clone() * &c(1)));
            let corr_r = tf_minus_f.scale(&(-k));
            images[gen::TG] = &images[gen::TG] + &corr_g;
            images[gen::TR] = &images[gen::TR] + &corr_r;
        }
    }
    Endomorphism::new(s, s, images)
}

/// `α'` agrees with `α` on the `x`'s and `π ∘ α' = α ∘ π`.
pub fn is_lift<C: Coeff>(lift: &Endomorphism<C>, alpha: &AffineMap<C>) -> bool {
    if lift.source() != Ring::Six || lift.target() != Ring::Six {
        return false;
    }
    if (0..3).any(|j| *lift.image(j) != alpha.image(j, Ring::Six)) {
        return false;
    }
    let pi = pi_map::<C>();
    let a3 = alpha.to_endomorphism(Ring::Three);
    let (Ok(lhs), Ok(rhs)) = (pi.compose(lift), a3.compose(&pi)) else {
        return false;
    };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Rational;
    use crate::poly::parse;

    type Q = Rational;

    fn p3(s: &str) -> Poly<Q> {
        parse(s, Ring::Three).unwrap()
    }

    #[test]
    fn base_polynomials_expand() {
        let (f, r, g) = base_polys::<Q>();
        assert_eq!(f.to_string(), "x1*x3 - x2^2");
        assert_eq!(r.len(), 3);
        assert_eq!(r, p3("x1*x2*x3 - x2^3 + x1^2"));
        assert_eq!(g.len(), 6);
        assert_eq!(g.total_degree(), crate::poly::Degree::Finite(5));
    }

    #[test]
    fn delta_images() {
        let (f, r, g) = base_polys::<Q>();
        let d = delta::<Q>();
        let x1 = p3("x1");
        assert_eq!(d.image(0), &(&p3("-2") * &(&r * &f)));
        assert_eq!(d.image(1), &(&(&p3("4") * &(&x1 * &r)) - &g));
        assert_eq!(d.image(2), &(&(&p3("6*x2") * &r) + &(&p3("2") * &f.pow(2))));
        assert_eq!(d.derive(&r).unwrap(), -&(&f * &g));
        assert!(d.derive(&f).unwrap().is_zero());
        assert!(d.derive(&g).unwrap().is_zero());
    }

    #[test]
    fn nilpotency_of_delta_on_coordinates() {
        let d = delta::<Q>();
        let idx: Vec<u32> = (0..3)
            .map(|i| d.nilpotency_index(&p3(["x1", "x2", "x3"][i]), 64).unwrap())
            .collect();
        assert_eq!(idx, vec![3, 5, 7]);
    }

    #[test]
    fn beta_rejects_zero() {
        assert_eq!(
            beta::<Q>(&Q::from(0)).unwrap_err(),
            Error::NonInvertibleScale
        );
    }

    #[test]
    fn types() {
        let id = AffineMap::<Q>::identity();
        assert_eq!(affine_type(&id, None).unwrap(), AffineType([1, 2, 3]));
        let b = AffineMap::<Q>::scaling(&Q::from(2));
        assert_eq!(affine_type(&b, None).unwrap(), AffineType([1, 2, 3]));
        assert!(affine_type(&b, Some(AffineType([3, 3, 3]))).is_err());
        assert_eq!(in_b(&b), Some(Q::from(2)));
        assert_eq!(in_b(&id), Some(Q::from(1)));
    }

    #[test]
    fn hat_lift_of_identity() {
        let h = hat_lift(&AffineMap::<Q>::identity());
        assert_eq!(h.image(gen::TF).to_string(), "tf");
        assert_eq!(h.image(gen::TR).to_string(), "x1^2 + x2*tf");
        assert!(is_lift(&h, &AffineMap::identity()));
        assert!(is_lift(
            &Endomorphism::identity(Ring::Six),
            &AffineMap::<Q>::identity()
        ));
    }

    #[test]
    fn shifted_tf_is_not_a_lift() {
        let mut imgs = Endomorphism::<Q>::identity(Ring::Six).into_images();
        imgs[gen::TF] = &imgs[gen::TF] + &Polynomial::one(Ring::Six);
        let e = Endomorphism::new(Ring::Six, Ring::Six, imgs).unwrap();
        assert!(!is_lift(&e, &AffineMap::identity()));
    }
}
