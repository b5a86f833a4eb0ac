use std::process::{Command, Output};

fn cotame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn emit_f() {
    let o = cotame(&["emit", "f"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x1*x3 - x2^2\n");
}

#[test]
fn emit_structured_is_json() {
    let o = cotame(&["emit", "delta-prime", "--format", "structured"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"kind\": \"derivation\""));
}

#[test]
fn symbolic_case_passes() {
    let o = cotame(&["lemma", "L6.viii"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("PASS L6.viii:R' class=(3,4)"));
    assert!(out.lines().last().unwrap().ends_with("0 not passing"));
}

#[test]
fn numeric_case_writes_report() {
    let dir = std::env::temp_dir().join(format!("cotame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("l5.json");
    let o = cotame(&[
        "lemma",
        "L5.iii",
        "--numeric",
        "--seed",
        "1",
        "--trials",
        "20",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let json = std::fs::read_to_string(&path).unwrap();
    assert!(json.contains("\"id\": \"L5.iii:numeric\""));
    assert!(json.contains("\"seed\": 1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_case_exits_with_error() {
    let o = cotame(&["lemma", "L9.x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown case"));
}

#[test]
fn word_length_is_bounded() {
    assert!(!cotame(&["theorem1", "--s", "3"]).status.success());
    let o = cotame(&["words", "--s", "1", "--seed", "4"]);
    assert!(o.status.success());
}

#[test]
fn foundations_and_centralizer_pass() {
    assert!(cotame(&["foundations"]).status.success());
    assert!(cotame(&["centralizer"]).status.success());
}

#[test]
fn tiny_budget_is_reported() {
    let o = cotame(&["theorem1", "--s", "2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("term budget 10 exceeded"));
}
