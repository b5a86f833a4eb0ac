//! Degrees of short words `φ_{u1} ∘ α ∘ φ_{u2}`.
//!
//! `θ(x_i)` for a word of length two has degree in the hundreds, so it is
//! never expanded. Its degree is pinned between two bounds instead: the
//! degree of its restriction to a random line, reduced modulo a prime (from
//! below), and the product `max_j deg φ_{u1}(x_j) · deg φ_{u2}(x_i)` (from
//! above). When they agree the degree is known exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::Rational;
use crate::derivation::Endomorphism;
use crate::error::{Error, Result};
use crate::objects::{in_b, phi, phi_prime, AffineMap};
use crate::pclass::{certify_image, compose_class_bound, small_rational, ClassIndex};
use crate::poly::{Polynomial, Ring};

use super::lemma::numeric_instance;
use super::report::Report;

type Q = Rational;

pub const DEFAULT_BUDGET: usize = 5_000_000;

fn degree(p: &Polynomial<Q>) -> u64 {
    p.total_degree().finite().unwrap_or(0)
}

fn guard(p: &Polynomial<Q>, budget: usize) -> Result<()> {
    if p.len() > budget {
        Err(Error::BudgetExceeded {
            budget,
            needed: p.len(),
        })
    } else {
        Ok(())
    }
}

/// `deg φ_u(x_i)` for `i = 1, 2, 3` at random nonzero `u`.
pub fn word_length_one(seed: u64, samples: usize) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..samples {
        let u = small_rational(&mut rng, 7);
        let p = phi(&u);
        let degs: Vec<u64> = p.images().iter().map(degree).collect();
        out.push(
            Report::compare(format!("words.s1[{k}]"), "[9, 16, 23]", format!("{degs:?}"))
                .with_seed(seed),
        );
    }
    out
}

const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P))
        .to_u64()
        .expect("reduced below P")
}

/// `None` when the denominator vanishes modulo `P`.
fn to_fp(q: &Rational) -> Option<u64> {
    let d = reduce(q.denom());
    (d != 0).then(|| mul_mod(reduce(q.numer()), pow_mod(d, P - 2)))
}

/// Dense univariate polynomial over `Z/P`, lowest degree first.
type Uni = Vec<u64>;

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y)) % P;
        }
    }
    out
}

fn uni_axpy(acc: &mut Uni, c: u64, x: &Uni) {
    if acc.len() < x.len() {
        acc.resize(x.len(), 0);
    }
    for (a, &b) in acc.iter_mut().zip(x) {
        *a = (*a + mul_mod(c, b)) % P;
    }
}

fn uni_degree(a: &Uni) -> u64 {
    a.iter().rposition(|&c| c != 0).unwrap_or(0) as u64
}

/// `p(l_1, l_2, l_3)` modulo `P`.
fn restrict(p: &Polynomial<Q>, l: &[Uni]) -> Option<Uni> {
    let mut pows: Vec<Vec<Uni>> = l.iter().map(|x| vec![vec![1], x.clone()]).collect();
    let mut out = Vec::new();
    for (m, c) in p.iter() {
        let mut t: Uni = vec![to_fp(c)?];
        for (v, pv) in pows.iter_mut().enumerate() {
            let e = m.exp(v) as usize;
            while pv.len() <= e {
                let next = uni_mul(pv.last().expect("seeded"), &l[v]);
                pv.push(next);
            }
            if e > 0 {
                t = uni_mul(&t, &pv[e]);
            }
        }
        uni_axpy(&mut out, 1, &t);
    }
    Some(out)
}

/// Random line `t ↦ a t + b` modulo `P`.
fn line(rng: &mut ChaCha8Rng) -> Vec<Uni> {
    (0..3)
        .map(|_| {
            let b = if rng.gen_bool(0.5) {
                rng.gen_range(1..P)
            } else {
                0
            };
            vec![b, rng.gen_range(1..P)]
        })
        .collect()
}

/// Degree of `θ(x_i)` on a line, for `θ = φ_{u1} ∘ α ∘ φ_{u2}`; a lower
/// bound for `deg θ(x_i)`.
fn restricted_degree(
    outer: &Endomorphism<Q>,
    alpha: &AffineMap<Q>,
    inner_image: &Polynomial<Q>,
    l: &[Uni],
) -> Option<u64> {
    let v: Vec<Uni> = outer
        .images()
        .iter()
        .map(|p| restrict(p, l))
        .collect::<Option<_>>()?;
    let w: Vec<Uni> = (0..3)
        .map(|j| restrict(&alpha.image(j, Ring::Three), &v))
        .collect::<Option<_>>()?;
    Some(uni_degree(&restrict(inner_image, &w)?))
}

/// Word of length two with `α` drawn from the `(3, 2, 3)` case shape.
///
/// Per coordinate: the degree certificate, agreement with `5γ' + 2δ'` for
/// the class chain `P_{i,i+1} → P_{γ',δ'}`, and membership of the lifted
/// image in that class.
pub fn word_length_two(seed: u64, budget: usize) -> Vec<Report> {
    match length_two(seed, budget) {
        Ok(v) => v,
        Err(e) => vec![Report::fail("words.s2", e.to_string()).with_seed(seed)],
    }
}

fn length_two(seed: u64, budget: usize) -> Result<Vec<Report>> {
    let (alpha, lift, u1, w) = numeric_instance("L2.A", seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5eed));
    let u2 = small_rational(&mut rng, 7);
    let mut out = Vec::new();
    out.push(Report::new("words.s2.alpha_not_in_B", in_b(&alpha).is_none()).with_seed(seed));

    let outer = phi(&u1);
    let inner = phi(&u2);
    let outer_deg = outer.images().iter().map(degree).max().unwrap_or(0);
    let psi = phi_prime(&u1).compose(&lift)?;
    for p in psi.images() {
        guard(p, budget)?;
    }
    let inner_lift = phi_prime(&u2);
    let mut degs = Vec::new();
    for i in 0..3 {
        let k = i as u64 + 1;
        let id = format!("words.s2(x{k})");
        let start = ClassIndex::new(k, k + 1);
        let predicted = compose_class_bound(&w, start);
        let upper = outer_deg * degree(inner.image(i));
        let mut lower = 0;
        for _ in 0..4 {
            let l = line(&mut rng);
            let d = restricted_degree(&outer, &alpha, inner.image(i), &l).unwrap_or(0);
            lower = lower.max(d);
            if lower == upper {
                break;
            }
        }
        degs.push(lower);
        let r = if lower != upper {
            Report::fail(
                &id,
                format!("degree only bracketed: {lower} <= deg <= {upper}"),
            )
        } else {
            Report::compare(&id, predicted.pi_degree().to_string(), lower.to_string())
        };
        out.push(r.with_class(predicted).with_witness(w).with_seed(seed));

        let cert = certify_image(&psi, inner_lift.image(i))?;
        let got = cert.as_ref().and_then(|c| c.class());
        out.push(
            Report::compare(
                format!("{id}.class"),
                predicted.to_string(),
                got.map_or("undecided".to_string(), |c| c.to_string()),
            )
            .with_class(predicted)
            .with_seed(seed),
        );
    }
    // a word outside the affine group never has three linear coordinates
    out.push(
        Report::new("words.s2.non_affine", degs.iter().all(|&d| d > 1))
            .with_computed(format!("{degs:?}"))
            .with_seed(seed),
    );
    Ok(out)
}

pub fn verify_words(s: u32, seed: u64, budget: usize) -> Result<Vec<Report>> {
    match s {
        1 => Ok(word_length_one(seed, 10)),
        2 => Ok(word_length_two(seed, budget)),
        _ => Err(Error::CaseConstraintViolated(format!(
            "word length {s} is not supported (1 or 2)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn restriction_matches_rational_evaluation() {
        let p: Polynomial<Q> = parse("3/2*x1^2*x3 - x2 + 5", Ring::Three).unwrap();
        // x1 = 2t + 1, x2 = t, x3 = 3 at t = 4: 3/2 * 81 * 3 - 4 + 5
        let l = vec![vec![1, 2], vec![0, 1], vec![3]];
        let r = restrict(&p, &l).unwrap();
        let at4 = r.iter().rev().fold(0, |acc, &c| (mul_mod(acc, 4) + c) % P);
        let want = to_fp(&Rational::new(3 * 81 * 3 + 2, 2)).unwrap();
        assert_eq!(at4, want);
        assert_eq!(uni_degree(&r), 2);
    }

    #[test]
    fn word_length_one_degrees() {
        assert!(word_length_one(11, 3).iter().all(Report::passed));
    }
}
