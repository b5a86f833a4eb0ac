//! Which scalings `β_u` commute with `φ_1` over the rationals.
//!
//! `β_u ∘ φ_1 ∘ β_u^{-1} = φ_{u^7}`, and `φ_w = φ_1` forces `w = 1`, so the
//! question reduces to the rational roots of `u^7 - 1`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::coeffs::{Coeff, ParamFraction, ParamSymbol, Rational};
use crate::derivation::endo_equal;
use crate::error::Result;
use crate::objects::{base_polys, beta, beta_inverse, phi};
use crate::poly::Ring;

use super::report::Report;

type Pf = ParamFraction;

fn u() -> Pf {
    Pf::symbol(ParamSymbol::U, true)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("small coefficient");
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(n / d));
        }
        d += 1;
    }
    out
}

/// Rational roots of a univariate polynomial in `u`, by the rational root
/// theorem. Zero counts as a root when there is no constant term.
pub fn rational_roots(p: &Pf) -> BTreeSet<Rational> {
    let coeffs: Vec<(u16, Rational)> = p
        .numerator()
        .iter()
        .map(|(m, c)| (m.exp(ParamSymbol::U), c.clone()))
        .collect();
    let mut roots = BTreeSet::new();
    let Some(low) = coeffs.iter().map(|(e, _)| *e).min() else {
        return roots;
    };
    if low > 0 {
        roots.insert(Rational::zero());
    }
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, (_, c)| {
        num_integer::lcm(acc, c.denom().clone())
    });
    let ints: Vec<(u16, BigInt)> = coeffs
        .iter()
        .map(|(e, c)| (e - low, c.numer() * (&lcm / c.denom())))
        .collect();
    let lead = ints
        .iter()
        .max_by_key(|(e, _)| *e)
        .expect("nonempty")
        .1
        .clone();
    let constant = ints
        .iter()
        .find(|(e, _)| *e == 0)
        .expect("shifted")
        .1
        .clone();
    let eval = |x: &Rational| {
        ints.iter().fold(Rational::zero(), |acc, (e, c)| {
            acc + &(Rational::from_integer(c.clone()) * &x.pow(*e as u32))
        })
    };
    for p in divisors(&constant) {
        for q in divisors(&lead) {
            for sign in [1, -1] {
                let x = Rational::new(p.clone() * sign, q.clone());
                if eval(&x).is_zero() {
                    roots.insert(x);
                }
            }
        }
    }
    roots
}

fn roots_text(r: &BTreeSet<Rational>) -> String {
    let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn checks() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let one = Pf::one();
    let phi1 = phi(&one);

    let conj = beta(&u())?.compose(&phi1.compose(&beta_inverse(&u(), Ring::Three)?)?)?;
    out.push(Report::new(
        "centralizer.conjugate",
        endo_equal(&conj, &phi(&u().pow(7)))?,
    ));

    // φ_w(x1) - φ_1(x1), with w written as u
    let (f, r, g) = base_polys::<Pf>();
    let diff = phi(&u()).image(0) - phi1.image(0);
    let w1 = u() - &one;
    let w2 = u().pow(2) - &one;
    let want = &(&r * &f).scale(&(Pf::from_i64(-2) * &w1)) + &(&f.pow(2) * &g).scale(&w2);
    out.push(Report::compare(
        "centralizer.phi_w(x1)",
        want.canonical(),
        diff.canonical(),
    ));

    let mut common: Option<BTreeSet<Rational>> = None;
    for i in 0..3 {
        let d = phi(&u()).image(i) - phi1.image(i);
        for (_, c) in d.iter() {
            let roots = rational_roots(c);
            common = Some(match common {
                None => roots,
                Some(prev) => prev.intersection(&roots).cloned().collect(),
            });
        }
    }
    let one_only = BTreeSet::from([Rational::one()]);
    out.push(Report::compare(
        "centralizer.phi_w_equal_roots",
        roots_text(&one_only),
        roots_text(&common.unwrap_or_default()),
    ));

    let seventh = u().pow(7) - &one;
    out.push(Report::compare(
        "centralizer.unit_roots",
        roots_text(&one_only),
        roots_text(&rational_roots(&seventh)),
    ));

    let two = Rational::from_i64(2);
    let q1 = phi(&Rational::one());
    let conj2 = beta(&two)?.compose(&q1.compose(&beta_inverse(&two, Ring::Three)?)?)?;
    out.push(Report::new(
        "centralizer.beta_2_moves_phi",
        !endo_equal(&conj2, &q1)?,
    ));
    Ok(out)
}

/// Over the rationals `β_u` commutes with `φ_1` only for `u = 1`.
pub fn verify_centralizer() -> Vec<Report> {
    checks().unwrap_or_else(|e| vec![Report::fail("centralizer", e.to_string())])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_small_polynomials() {
        // 2u^2 - 3u + 1 = (2u - 1)(u - 1)
        let p = Pf::from_i64(2) * &u().pow(2) - &(Pf::from_i64(3) * &u()) + &Pf::one();
        let want = BTreeSet::from([Rational::new(1, 2), Rational::one()]);
        assert_eq!(rational_roots(&p), want);
        assert_eq!(rational_roots(&(u().pow(2) + &Pf::one())), BTreeSet::new());
        assert!(rational_roots(&u().pow(3)).contains(&Rational::zero()));
    }

    #[test]
    fn only_the_identity_scaling_commutes() {
        for r in verify_centralizer() {
            assert!(r.passed(), "{}", r.line());
        }
    }
}
