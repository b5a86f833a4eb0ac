//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p cotame-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use cotame_core::verify::{
    all_passed, centralizer, composition, degree, foundations, groups, properties, roster, run_all,
    to_json, verify_cases, words, Config, Report,
};

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn judge(
    name: &'static str,
    reports: &[Report],
    elapsed: Duration,
    limit: Option<Duration>,
) -> Outcome {
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = format!("{} checks, {} ms", reports.len(), elapsed.as_millis());
    if let Some(l) = limit {
        detail += &format!(" (limit {} ms)", l.as_millis());
    }
    for r in failed.iter().take(5) {
        detail += &format!("\n    {}", r.line().replace('\n', "\n    "));
    }
    Outcome {
        name,
        pass: !reports.is_empty() && failed.is_empty() && in_time,
        detail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion_foundations() -> Outcome {
    let (r, t) = timed(|| {
        let mut r = foundations::delta_checks();
        r.extend(foundations::scaling_checks());
        r.extend(foundations::conjugation_check());
        r.extend(foundations::pi_check());
        r
    });
    judge(
        "foundational identities",
        &r,
        t,
        Some(Duration::from_secs(1)),
    )
}

fn criterion_lifted_flow() -> Outcome {
    let (r, t) = timed(foundations::phi_prime_checks);
    judge("lifted flow expansions", &r, t, None)
}

fn criterion_degree() -> Outcome {
    let (r, t) = timed(|| degree::verify_pi_degree(1, degree::SAMPLES));
    let mut o = judge(
        "degree of π on classes",
        &r,
        t,
        Some(Duration::from_secs(30)),
    );
    o.pass &= r.len() == 25;
    o
}

fn criterion_cases(cases: &[Report], t: Duration) -> Outcome {
    let mut o = judge(
        "case lemmas, symbolic and numeric",
        cases,
        t,
        Some(Duration::from_secs(300)),
    );
    // every group has symbolic and numeric reports
    for g in groups() {
        let specs: Vec<String> = roster()
            .into_iter()
            .filter(|s| s.group == g)
            .map(|s| s.id)
            .collect();
        for id in specs {
            let numeric = cases.iter().any(|r| r.id == format!("{id}:numeric"));
            let symbolic = cases
                .iter()
                .any(|r| r.id.starts_with(&format!("{id}:")) && !r.id.ends_with(":numeric"));
            if !(numeric && symbolic) {
                o.pass = false;
                o.detail += &format!("\n    missing reports for {id}");
            }
        }
    }
    o
}

fn criterion_condition_c(cases: &[Report]) -> Outcome {
    let w: Vec<Report> = cases
        .iter()
        .filter(|r| r.id.ends_with(":witness"))
        .cloned()
        .collect();
    let mut o = judge("condition (C) witnesses", &w, Duration::ZERO, None);
    let with_images = roster().iter().filter(|s| s.images.is_some()).count();
    if w.len() != with_images {
        o.pass = false;
        o.detail += &format!("\n    {} witnesses for {with_images} cases", w.len());
    }
    o
}

fn criterion_composition() -> Outcome {
    let (r, t) = timed(|| composition::verify_composition(1));
    judge("class composition", &r, t, None)
}

fn criterion_words() -> Outcome {
    let (r, t) = timed(|| {
        let mut r = words::word_length_one(1, 10);
        for seed in [1, 2, 3] {
            r.extend(words::word_length_two(seed, words::DEFAULT_BUDGET));
        }
        r
    });
    judge(
        "word degrees, lengths 1 and 2",
        &r,
        t,
        Some(Duration::from_secs(600)),
    )
}

fn criterion_centralizer() -> Outcome {
    let (r, t) = timed(centralizer::verify_centralizer);
    judge("centralizer of the flow", &r, t, None)
}

fn criterion_properties() -> Outcome {
    let (r, t) = timed(|| properties::verify_properties(1));
    judge("property suites", &r, t, None)
}

fn criterion_determinism() -> Outcome {
    let cfg = Config::default();
    let (pair, t) = timed(|| (to_json(&run_all(&cfg)), to_json(&run_all(&cfg))));
    let same = pair.0 == pair.1;
    Outcome {
        name: "deterministic reports",
        pass: same && all_passed(&serde_json::from_str::<Vec<Report>>(&pair.0).unwrap()),
        detail: format!("{} bytes per run, {} ms", pair.0.len(), t.as_millis()),
    }
}

#[test]
fn acceptance() {
    let (cases, case_time) = timed(|| verify_cases(1, 20));
    let outcomes = [
        criterion_foundations(),
        criterion_lifted_flow(),
        criterion_degree(),
        criterion_cases(&cases, case_time),
        criterion_condition_c(&cases),
        criterion_composition(),
        criterion_words(),
        criterion_centralizer(),
        criterion_properties(),
        criterion_determinism(),
    ];
    for (k, o) in outcomes.iter().enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {}: {}", k + 1, o.name, o.detail);
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| o.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
