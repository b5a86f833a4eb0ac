//! `(φ'_u ∘ α')(p)` for random `p ∈ P(γ, δ)` lands in the class predicted
//! by the witness.
//!
//! Membership is read from [`certify_image`]: the leading term is exact and
//! the weighted degrees are bounded term by term, so nothing is expanded.
//! One element per shape is also expanded outright and classified directly.

use crate::coeffs::Rational;
use crate::error::Result;
use crate::objects::phi_prime;
use crate::pclass::{
    certify_image, classify, compose_class_bound, random_class_element, ClassIndex,
};

use super::lemma::numeric_instance;
use super::report::Report;

pub const SHAPES: [&str; 2] = ["L2.A", "L6.iv"];
pub const MAX_INDEX: u64 = 3;
pub const SAMPLES: u64 = 10;

fn mix(seed: u64, idx: ClassIndex, k: u64) -> u64 {
    seed ^ (idx.gamma << 48) ^ (idx.delta << 40) ^ (k << 8)
}

fn shape(id: &str, seed: u64) -> Result<Vec<Report>> {
    let (_, lift, u, w) = numeric_instance(id, seed)?;
    let psi = phi_prime(&u).compose(&lift)?;
    let mut out = Vec::new();
    for gamma in 1..=MAX_INDEX {
        for delta in 1..=MAX_INDEX {
            let idx = ClassIndex::new(gamma, delta);
            let want = compose_class_bound(&w, idx);
            let mut bad = None;
            for k in 0..SAMPLES {
                let p = random_class_element(idx, mix(seed, idx, k), 6)?;
                let got = certify_image(&psi, &p)?.and_then(|c| c.class());
                if got != Some(want) {
                    bad = Some(got.map_or("undecided".to_string(), |c| c.to_string()));
                    break;
                }
            }
            let grows = want.gamma >= gamma && want.delta >= delta;
            let rid = format!("composition.{id}{idx}");
            let r = match bad {
                Some(got) => Report::compare(rid, want.to_string(), got),
                None => Report::new(rid, grows),
            };
            out.push(r.with_class(want).with_witness(w).with_seed(seed));
        }
    }

    // one element expanded in full
    let idx = ClassIndex::new(1, 1);
    let want = compose_class_bound(&w, idx);
    let p = random_class_element(idx, mix(seed, idx, SAMPLES), 2)?;
    let image = psi.apply(&p)?;
    let got = classify::<Rational>(&image)?;
    out.push(
        Report::compare(
            format!("composition.{id}{idx}.expanded"),
            want.to_string(),
            got.map_or("none".to_string(), |c| c.to_string()),
        )
        .with_class(want)
        .with_seed(seed),
    );
    Ok(out)
}

pub fn verify_composition(seed: u64) -> Vec<Report> {
    SHAPES
        .iter()
        .flat_map(|id| {
            shape(id, seed).unwrap_or_else(|e| {
                vec![Report::fail(format!("composition.{id}"), e.to_string()).with_seed(seed)]
            })
        })
        .collect()
}
