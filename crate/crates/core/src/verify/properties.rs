//! Seeded property checks on small random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{ParamFraction, ParamSymbol, Rational, SymbolSet};
use crate::derivation::{endo_equal, Derivation, Endomorphism, DEFAULT_CAP};
use crate::error::Result;
use crate::objects::{base_polys, delta, delta_prime, phi, phi_prime};
use crate::pclass::{classify, in_class, random_class_element, small_rational, ClassIndex};
use crate::poly::{Monomial, Polynomial, Ring};

use super::report::Report;

type Q = Rational;

pub const SAMPLES: usize = 50;

/// Up to four terms, each of total degree at most `max_deg`.
fn random_poly(rng: &mut ChaCha8Rng, ring: Ring, max_deg: u32) -> Polynomial<Q> {
    let n = rng.gen_range(1..=4);
    let terms: Vec<(Monomial, Q)> = (0..n)
        .map(|_| {
            let mut e = [0u32; 6];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[rng.gen_range(0..ring.ngens())] += 1;
            }
            (Monomial(e), small_rational(rng, 7))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn point(rng: &mut ChaCha8Rng) -> Vec<Polynomial<Q>> {
    (0..3)
        .map(|_| Polynomial::constant(Ring::Three, small_rational(rng, 7)))
        .collect()
}

fn at(e: &Endomorphism<Q>, pt: &[Polynomial<Q>]) -> Result<Vec<Polynomial<Q>>> {
    e.images().iter().map(|p| p.substitute(pt)).collect()
}

/// Runs `check` on `SAMPLES` seeded draws and reports the first failure.
fn suite(
    id: &str,
    seed: u64,
    mut check: impl FnMut(&mut ChaCha8Rng) -> Result<Option<String>>,
) -> Report {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ id.bytes().fold(0u64, |h, b| h.rotate_left(5) ^ b as u64));
    for k in 0..SAMPLES {
        match check(&mut rng) {
            Ok(None) => {}
            Ok(Some(why)) => return Report::fail(id, format!("sample {k}: {why}")).with_seed(seed),
            Err(e) => return Report::fail(id, format!("sample {k}: {e}")).with_seed(seed),
        }
    }
    Report::new(id, true).with_seed(seed)
}

fn leibniz(d: &Derivation<Q>, ring: Ring, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let p = random_poly(rng, ring, 4);
    let q = random_poly(rng, ring, 4);
    let lhs = d.derive(&(&p * &q))?;
    let rhs = &(&p * &d.derive(&q)?) + &(&q * &d.derive(&p)?);
    Ok((lhs != rhs).then(|| format!("p = {p}, q = {q}")))
}

pub fn verify_properties(seed: u64) -> Vec<Report> {
    let d = delta::<Q>();
    let dp = delta_prime::<Q>();
    let mut out = vec![
        suite("property.leibniz.delta", seed, |rng| {
            leibniz(&d, Ring::Three, rng)
        }),
        suite("property.leibniz.delta_prime", seed, |rng| {
            leibniz(&dp, Ring::Six, rng)
        }),
    ];

    out.push(suite("property.exp_homomorphism", seed, |rng| {
        let u = small_rational(rng, 7);
        let p = random_poly(rng, Ring::Six, 3);
        let q = random_poly(rng, Ring::Six, 3);
        let e = |x: &Polynomial<Q>| dp.exp_apply(&u, x, DEFAULT_CAP);
        let ok = e(&(&p * &q))? == &e(&p)? * &e(&q)? && e(&(&p + &q))? == &e(&p)? + &e(&q)?;
        Ok((!ok).then(|| format!("u = {u}, p = {p}, q = {q}")))
    }));

    out.push(kernel(seed));

    out.push(suite("property.one_parameter", seed, |rng| {
        let (u, v) = (small_rational(rng, 7), small_rational(rng, 7));
        let pt = point(rng);
        let lhs = at(&phi(&u), &at(&phi(&v), &pt)?)?;
        let rhs = at(&phi(&(u.clone() + &v)), &pt)?;
        Ok((lhs != rhs).then(|| format!("u = {u}, v = {v}")))
    }));
    out.push(one_parameter_lifted(seed));

    out.push(suite("property.classify_in_class", seed, |rng| {
        let idx = ClassIndex::new(rng.gen_range(0..=4), rng.gen_range(1..=4));
        let p = random_class_element(idx, rng.gen(), 6)?;
        if classify(&p)? != Some(idx) || !in_class(&p, idx) {
            return Ok(Some(format!("member of {idx} misread: {p}")));
        }
        // an arbitrary polynomial is in exactly the class it classifies to
        let q = random_poly(rng, Ring::Six, 5);
        let c = classify(&q)?;
        let other = ClassIndex::new(rng.gen_range(0..=4), rng.gen_range(1..=4));
        let coherent = match c {
            Some(c) => in_class(&q, c) && (other == c || !in_class(&q, other)),
            None => !in_class(&q, other),
        };
        Ok((!coherent).then(|| format!("{q} vs {other}")))
    }));
    out
}

/// `φ_u` fixes `f` and `g`: once with `u` symbolic, then pointwise.
fn kernel(seed: u64) -> Report {
    let symbolic = || -> Result<bool> {
        let u = ParamFraction::symbol(ParamSymbol::U, true);
        let (f, _, g) = base_polys::<ParamFraction>();
        let p = phi(&u);
        Ok(p.apply(&f)? == f && p.apply(&g)? == g)
    };
    match symbolic() {
        Ok(true) => {}
        Ok(false) => {
            return Report::fail("property.kernel", "symbolic image differs").with_seed(seed)
        }
        Err(e) => return Report::fail("property.kernel", e.to_string()).with_seed(seed),
    }
    let (f, _, g) = base_polys::<Q>();
    suite("property.kernel", seed, |rng| {
        let u = small_rational(rng, 7);
        let pt = point(rng);
        let moved = at(&phi(&u), &pt)?;
        let ok = f.substitute(&moved)? == f.substitute(&pt)?
            && g.substitute(&moved)? == g.substitute(&pt)?;
        Ok((!ok).then(|| format!("u = {u}")))
    })
}

/// `φ'_u ∘ φ'_v = φ'_{u+v}` with `u`, `v` symbolic.
fn one_parameter_lifted(seed: u64) -> Report {
    let id = "property.one_parameter.lifted";
    let run = || -> Result<bool> {
        let uv = SymbolSet::of(&[ParamSymbol::U, ParamSymbol::V]);
        let u = ParamFraction::symbol(ParamSymbol::U, true).with_invertible(uv);
        let v = ParamFraction::symbol(ParamSymbol::V, true).with_invertible(uv);
        let lhs = phi_prime(&u).compose(&phi_prime(&v))?;
        endo_equal(&lhs, &phi_prime(&(u + &v)))
    };
    match run() {
        Ok(ok) => Report::new(id, ok).with_seed(seed),
        Err(e) => Report::fail(id, e.to_string()).with_seed(seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_poly_stays_in_ring() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let p = random_poly(&mut rng, Ring::Three, 3);
            assert!(p.iter().all(|(m, _)| m.is_three_var()));
        }
    }
}
