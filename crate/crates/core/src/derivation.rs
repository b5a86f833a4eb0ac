//! Derivations, their exponentials, and ring maps given by generator images.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeffs::{Coeff, Rational};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

pub const DEFAULT_CAP: u32 = 64;

/// A coefficient-linear Leibniz map, stored as its generator images.
#[derive(Clone, PartialEq)]
pub struct Derivation<C> {
    ring: Ring,
    images: Vec<Polynomial<C>>,
}

impl<C: Coeff> Derivation<C> {
    pub fn new(images: Vec<Polynomial<C>>) -> Result<Self> {
        let ring = match images.len() {
            3 => Ring::Three,
            6 => Ring::Six,
            _ => {
                return Err(Error::RingMismatch {
                    expected: Ring::Six,
                    found: Ring::Three,
                })
            }
        };
        for p in &images {
            if p.ring() != ring {
                return Err(Error::RingMismatch {
                    expected: ring,
                    found: p.ring(),
                });
            }
        }
        Ok(Derivation { ring, images })
    }

    pub fn zero(ring: Ring) -> Self {
        Derivation {
            ring,
            images: vec![Polynomial::zero(ring); ring.ngens()],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn images(&self) -> &[Polynomial<C>] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Polynomial<C> {
        &self.images[gen]
    }

    /// `sum_v partial(p, v) * D(v)`.
    pub fn derive(&self, p: &Polynomial<C>) -> Result<Polynomial<C>> {
        if p.ring() != self.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: p.ring(),
            });
        }
        let mut out = Polynomial::zero(self.ring);
        for (v, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let dp = p.partial(v);
            if !dp.is_zero() {
                out = &out + &(&dp * img);
            }
        }
        Ok(out)
    }

    /// Smallest `l <= cap` with `D^l(p) = 0`.
    pub fn nilpotency_index(&self, p: &Polynomial<C>, cap: u32) -> Result<u32> {
        Ok(self.iterates(p, cap)?.len() as u32)
    }

    /// `[p, D(p), D^2(p), ...]` up to the last nonzero iterate.
    fn iterates(&self, p: &Polynomial<C>, cap: u32) -> Result<Vec<Polynomial<C>>> {
        let mut out = Vec::new();
        let mut cur = p.clone();
        while !cur.is_zero() {
            if out.len() as u32 >= cap {
                return Err(Error::CapExceeded { cap });
            }
            let next = self.derive(&cur)?;
            out.push(cur);
            cur = next;
        }
        Ok(out)
    }

    /// `sum_i u^i D^i(p) / i!`, which terminates because `D` is locally
    /// nilpotent on `p`.
    pub fn exp_apply(&self, u: &C, p: &Polynomial<C>, cap: u32) -> Result<Polynomial<C>> {
        let its = self.iterates(p, cap)?;
        let mut out = Polynomial::zero(self.ring);
        let mut upow = C::one();
        for (i, d) in its.iter().enumerate() {
            if i > 0 {
                upow = upow * u;
            }
            let inv_fact = Rational::factorial(i as u32).recip().unwrap();
            let k = upow.clone() * &C::from_rational(&inv_fact);
            out = &out + &d.scale(&k);
        }
        Ok(out)
    }

    pub fn exp_endomorphism(&self, u: &C, cap: u32) -> Result<Endomorphism<C>> {
        let images = (0..self.ring.ngens())
            .into_par_iter()
            .map(|v| self.exp_apply(u, &Polynomial::var(self.ring, v), cap))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(self.ring, self.ring, images)
    }
}

/// Ring map given by the images of the source generators.
///
/// Composition follows `(outer ∘ inner)(x) = outer(inner(x))`.
#[derive(Clone, PartialEq)]
pub struct Endomorphism<C> {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial<C>>,
}

impl<C: Coeff> Endomorphism<C> {
    pub fn new(source: Ring, target: Ring, images: Vec<Polynomial<C>>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::RingMismatch {
                expected: source,
                found: target,
            });
        }
        for p in &images {
            if p.ring() != target {
                return Err(Error::RingMismatch {
                    expected: target,
                    found: p.ring(),
                });
            }
        }
        Ok(Endomorphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(ring: Ring) -> Self {
        Endomorphism {
            source: ring,
            target: ring,
            images: (0..ring.ngens())
                .map(|v| Polynomial::var(ring, v))
                .collect(),
        }
    }

    pub fn source(&self) -> Ring {
        self.source
    }

    pub fn target(&self) -> Ring {
        self.target
    }

    pub fn images(&self) -> &[Polynomial<C>] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Polynomial<C> {
        &self.images[gen]
    }

    pub fn into_images(self) -> Vec<Polynomial<C>> {
        self.images
    }

    pub fn apply(&self, p: &Polynomial<C>) -> Result<Polynomial<C>> {
        if p.ring() != self.source {
            return Err(Error::RingMismatch {
                expected: self.source,
                found: p.ring(),
            });
        }
        p.substitute(&self.images)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Endomorphism<C>) -> Result<Endomorphism<C>> {
        if inner.target != self.source {
            return Err(Error::RingMismatch {
                expected: self.source,
                found: inner.target,
            });
        }
        let images = inner
            .images
            .par_iter()
            .map(|p| self.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            source: inner.source,
            target: self.target,
            images,
        })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D + Copy) -> Endomorphism<D> {
        Endomorphism {
            source: self.source,
            target: self.target,
            images: self.images.iter().map(|p| p.map_coeffs(f)).collect(),
        }
    }

    /// Generator name and canonical image text, in generator order.
    pub fn named_images(&self) -> Vec<(String, String)> {
        self.source
            .gen_names()
            .iter()
            .zip(&self.images)
            .map(|(n, p)| (n.to_string(), p.canonical()))
            .collect()
    }
}

/// Syntactic equality of generator images.
pub fn endo_equal<C: Coeff>(a: &Endomorphism<C>, b: &Endomorphism<C>) -> Result<bool> {
    if a.source != b.source || a.target != b.target {
        return Err(Error::RingMismatch {
            expected: a.source,
            found: b.source,
        });
    }
    Ok(a.images == b.images)
}

impl<C: Coeff> fmt::Display for Endomorphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.named_images() {
            writeln!(f, "{n} -> {p}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Endomorphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} -> {:?} {:?}",
            self.source,
            self.target,
            self.named_images()
        )
    }
}

impl<C: Coeff> fmt::Debug for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

#[derive(Serialize)]
struct NamedImage {
    gen: String,
    image: String,
}

impl<C: Coeff> Serialize for Endomorphism<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<NamedImage> = self
            .named_images()
            .into_iter()
            .map(|(gen, image)| NamedImage { gen, image })
            .collect();
        v.serialize(s)
    }
}

impl<C: Coeff> Serialize for Derivation<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<NamedImage> = self
            .ring
            .gen_names()
            .iter()
            .zip(&self.images)
            .map(|(n, p)| NamedImage {
                gen: n.to_string(),
                image: p.canonical(),
            })
            .collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{gen, parse, six};

    fn q(s: &str) -> Polynomial<Rational> {
        parse(s, Ring::Six).unwrap()
    }

    fn triangular() -> Derivation<Rational> {
        Derivation::new(vec![
            q("-2*tr*tf"),
            q("4*x1*tr - tg"),
            q("6*x2*tr + 2*tf^2"),
            q("-tf*tg"),
            q("0"),
            q("0"),
        ])
        .unwrap()
    }

    #[test]
    fn indices_on_t_generators() {
        let d = triangular();
        assert_eq!(d.nilpotency_index(&six(gen::TF), 64).unwrap(), 1);
        assert_eq!(d.nilpotency_index(&six(gen::TR), 64).unwrap(), 2);
        assert_eq!(d.nilpotency_index(&q("0"), 64).unwrap(), 0);
    }

    #[test]
    fn cap_is_an_error() {
        let d = triangular();
        assert_eq!(
            d.nilpotency_index(&six(gen::X3), 2),
            Err(Error::CapExceeded { cap: 2 })
        );
        // x -> x is not nilpotent on x
        let e = Derivation::new(vec![six(0), q("0"), q("0"), q("0"), q("0"), q("0")]).unwrap();
        assert!(e.exp_apply(&Rational::from(1), &six(0), 64).is_err());
    }

    #[test]
    fn zero_derivation_exp_is_identity() {
        let z = Derivation::<Rational>::zero(Ring::Six);
        let p = q("x1*tf + 3*tg^2 - 7");
        assert_eq!(z.exp_apply(&Rational::from(5), &p, 64).unwrap(), p);
    }

    #[test]
    fn compose_checks_rings() {
        let a = Endomorphism::<Rational>::identity(Ring::Three);
        let b = Endomorphism::<Rational>::identity(Ring::Six);
        assert!(a.compose(&b).is_err());
        assert!(endo_equal(&a, &a).unwrap());
    }

    #[test]
    fn leibniz_on_a_product() {
        let d = triangular();
        let p = q("x1*tr + x2^2");
        let r = q("x3*tf - tg");
        let lhs = d.derive(&(&p * &r)).unwrap();
        let rhs = &(&p * &d.derive(&r).unwrap()) + &(&d.derive(&p).unwrap() * &r);
        assert_eq!(lhs, rhs);
    }
}
