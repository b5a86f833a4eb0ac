//! Replay drivers: each check produces a [`Report`].

pub mod cases;
pub mod centralizer;
pub mod composition;
pub mod degree;
pub mod emit;
pub mod foundations;
pub mod lemma;
pub mod properties;
pub mod report;
pub mod words;

use rayon::prelude::*;

pub use cases::{groups, lookup, roster, CaseSpec};
pub use emit::{emit, emit_reports, Format, Object};
pub use lemma::{run_numeric, run_symbolic, verify_lemma, Mode};
pub use report::{all_passed, to_json, to_text, Report, Status};
pub use words::DEFAULT_BUDGET;

/// Seeds and sizes for a full run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub trials: u32,
    pub budget: usize,
    pub word_seeds: Vec<u64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 1,
            trials: 20,
            budget: DEFAULT_BUDGET,
            word_seeds: vec![1, 2, 3],
        }
    }
}

/// Every case in symbolic mode, then in numeric mode, in roster order.
pub fn verify_cases(seed: u64, trials: u32) -> Vec<Report> {
    let specs = roster();
    let symbolic: Vec<Vec<Report>> = specs.par_iter().map(run_symbolic).collect();
    let numeric: Vec<Vec<Report>> = specs
        .par_iter()
        .map(|s| run_numeric(s, seed, trials))
        .collect();
    symbolic.into_iter().chain(numeric).flatten().collect()
}

/// Named groups of reports, in a fixed order.
pub fn run_sections(cfg: &Config) -> Vec<(&'static str, Vec<Report>)> {
    let mut word_reports = words::word_length_one(cfg.seed, 10);
    for &s in &cfg.word_seeds {
        word_reports.extend(words::word_length_two(s, cfg.budget));
    }
    vec![
        ("foundations", foundations::verify_foundations()),
        (
            "degree",
            degree::verify_pi_degree(cfg.seed, degree::SAMPLES),
        ),
        ("cases", verify_cases(cfg.seed, cfg.trials)),
        ("composition", composition::verify_composition(cfg.seed)),
        ("words", word_reports),
        ("centralizer", centralizer::verify_centralizer()),
        ("properties", properties::verify_properties(cfg.seed)),
    ]
}

pub fn run_all(cfg: &Config) -> Vec<Report> {
    run_sections(cfg).into_iter().flat_map(|(_, r)| r).collect()
}
