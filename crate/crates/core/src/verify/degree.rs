//! `deg π(p) = 5γ + 2δ` for random members of `P(γ, δ)`.

use rayon::prelude::*;

use crate::coeffs::Rational;
use crate::error::Result;
use crate::objects::pi_map;
use crate::pclass::{random_class_element, ClassIndex};

use super::report::Report;

pub const MAX_INDEX: u64 = 5;
pub const SAMPLES: u64 = 100;
const LOWER_TERMS: usize = 6;

fn sample_degree(idx: ClassIndex, seed: u64) -> Result<u64> {
    let p = random_class_element(idx, seed, LOWER_TERMS)?;
    let image = pi_map::<Rational>().apply(&p)?;
    Ok(image.total_degree().finite().unwrap_or(0))
}

/// One report per index pair; a pair fails on its first bad sample.
pub fn verify_pi_degree(seed: u64, samples: u64) -> Vec<Report> {
    let pairs: Vec<ClassIndex> = (1..=MAX_INDEX)
        .flat_map(|g| (1..=MAX_INDEX).map(move |d| ClassIndex::new(g, d)))
        .collect();
    pairs
        .par_iter()
        .map(|&idx| {
            let id = format!("pi_degree{idx}");
            let want = idx.pi_degree();
            let bad = (0..samples).find_map(|k| {
                let s = seed ^ (idx.gamma << 40) ^ (idx.delta << 32) ^ k;
                match sample_degree(idx, s) {
                    Ok(d) if d == want => None,
                    Ok(d) => Some(Report::compare(
                        &id,
                        want.to_string(),
                        format!("{d} (sample {k})"),
                    )),
                    Err(e) => Some(Report::fail(&id, e.to_string())),
                }
            });
            bad.unwrap_or_else(|| Report::compare(&id, want.to_string(), want.to_string()))
                .with_class(idx)
                .with_seed(seed)
        })
        .collect()
}
