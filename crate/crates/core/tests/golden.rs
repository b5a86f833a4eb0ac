//! Byte-exact comparison against the frozen files in `tests/golden`.

use cotame_core::verify::{foundations, roster, run_symbolic};

const PHI_PRIME: &str = include_str!("golden/phi_prime.txt");
const LEADING_TERMS: &str = include_str!("golden/leading_terms.txt");

#[test]
fn lifted_flow_images() {
    assert_eq!(foundations::phi_prime_canonical(), PHI_PRIME);
}

#[test]
fn case_leading_terms() {
    let mut s = String::new();
    for spec in roster() {
        for r in run_symbolic(&spec) {
            let name = r.id.rsplit(':').next().unwrap_or_default();
            if ["R", "F", "G", "R'", "G'"].contains(&name) {
                let class = r.class.expect("image reports carry a class");
                s += &format!("{} {class} {}\n", r.id, r.computed.unwrap_or_default());
            }
        }
    }
    let got: Vec<&str> = s.lines().collect();
    let want: Vec<&str> = LEADING_TERMS.lines().collect();
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(&want) {
        assert_eq!(g, w);
    }
    assert_eq!(s, LEADING_TERMS);
}
