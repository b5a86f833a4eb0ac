use cotame_core::objects::{beta, beta_inverse, phi};
use cotame_core::pclass::ClassIndex;
use cotame_core::verify::{
    emit, lookup, run_numeric, run_symbolic, verify_lemma, Format, Mode, Object, Status,
};
use cotame_core::{endo_equal, Coeff, Error, ParamFraction, ParamSymbol, Ring};

#[test]
fn reversed_conjugation_differs() {
    let u = ParamFraction::symbol(ParamSymbol::U, true);
    let v = ParamFraction::symbol(ParamSymbol::V, true);
    let wrong = beta_inverse(&v, Ring::Three)
        .unwrap()
        .compose(&phi(&u).compose(&beta(&v).unwrap()).unwrap())
        .unwrap();
    let rhs = phi(&(u * &v.pow(7)));
    assert!(!endo_equal(&wrong, &rhs).unwrap());
}

#[test]
fn unknown_case_is_an_error() {
    assert!(matches!(
        verify_lemma("L7.i", Mode::Symbolic),
        Err(Error::UnknownCase(id)) if id == "L7.i"
    ));
}

#[test]
fn group_ids_expand_to_branches() {
    assert_eq!(lookup("L6.i").unwrap().len(), 4);
    assert_eq!(lookup("L4.ii(2,3)").unwrap().len(), 1);
}

#[test]
fn wrong_expectation_fails_with_both_strings() {
    let mut spec = lookup("L6.viii").unwrap().remove(0);
    let images = spec.images.as_mut().unwrap();
    images[0].coeff = "-P^3/(2*c1^2)*u^6".into();
    let reports = run_symbolic(&spec);
    let r = reports.iter().find(|r| r.id == "L6.viii:R'").unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_ne!(r.expected, r.computed);
    assert!(r.line().contains("expected:") && r.line().contains("computed:"));
}

#[test]
fn wrong_class_fails() {
    let mut spec = lookup("L2.A").unwrap().remove(0);
    spec.images.as_mut().unwrap()[1].class = ClassIndex::new(5, 7);
    let reports = run_symbolic(&spec);
    assert!(reports
        .iter()
        .any(|r| r.id == "L2.A:F" && r.status == Status::Fail));
}

#[test]
fn numeric_mode_is_seeded() {
    let spec = lookup("L5.iii").unwrap().remove(0);
    let a = run_numeric(&spec, 7, 5);
    let b = run_numeric(&spec, 7, 5);
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.passed()));
    assert_eq!(a[0].seed, Some(7));
}

#[test]
fn scaling_case_lands_in_b() {
    let reports = verify_lemma("L5.iv", Mode::Symbolic).unwrap();
    assert!(reports.iter().any(|r| r.id.ends_with(":in_B")));
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn emit_is_repeatable() {
    for o in Object::ALL {
        for f in [Format::Text, Format::Structured] {
            assert_eq!(emit(o, f).unwrap(), emit(o, f).unwrap());
        }
    }
}

#[test]
fn structured_lifted_flow_lists_six_images() {
    let s = emit(Object::PhiPrime, Format::Structured).unwrap();
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["kind"], "endomorphism");
    let images = v["images"].as_array().unwrap();
    assert_eq!(images.len(), 6);
    assert_eq!(images[4]["gen"], "tf");
    assert_eq!(images[4]["image"], "tf");
}
