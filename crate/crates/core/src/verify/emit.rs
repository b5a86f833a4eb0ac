//! Canonical serialization of the named objects and of report lists.

use std::str::FromStr;

use serde::Serialize;

use crate::coeffs::{ParamFraction, ParamSymbol, Rational};
use crate::derivation::{Derivation, Endomorphism};
use crate::error::{Error, Result};
use crate::objects::{base_polys, beta, delta, delta_prime, phi, phi_prime, pi_map};
use crate::poly::{Polynomial, Ring};

use super::report::{to_json, to_text, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "structured" | "json" => Ok(Format::Structured),
            _ => Err(Error::UnknownObject(format!("format {s}"))),
        }
    }
}

/// Objects that can be emitted by name. Flows and scalings carry a symbolic `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Object {
    F,
    R,
    G,
    Delta,
    DeltaPrime,
    Phi,
    PhiPrime,
    Pi,
    Beta,
}

impl Object {
    pub const ALL: [Object; 9] = [
        Object::F,
        Object::R,
        Object::G,
        Object::Delta,
        Object::DeltaPrime,
        Object::Phi,
        Object::PhiPrime,
        Object::Pi,
        Object::Beta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Object::F => "f",
            Object::R => "r",
            Object::G => "g",
            Object::Delta => "delta",
            Object::DeltaPrime => "delta-prime",
            Object::Phi => "phi",
            Object::PhiPrime => "phi-prime",
            Object::Pi => "pi",
            Object::Beta => "beta",
        }
    }
}

impl FromStr for Object {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Object::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::UnknownObject(s.to_string()))
    }
}

#[derive(Serialize)]
struct PolyRecord<'a> {
    object: &'a str,
    ring: Ring,
    terms: usize,
    canonical: String,
}

#[derive(Serialize)]
struct MapRecord<'a, T> {
    object: &'a str,
    kind: &'a str,
    images: &'a T,
}

fn u() -> ParamFraction {
    ParamFraction::symbol(ParamSymbol::U, true)
}

fn poly_out(name: &str, p: &Polynomial<Rational>, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", p.canonical()),
        Format::Structured => json(&PolyRecord {
            object: name,
            ring: p.ring(),
            terms: p.len(),
            canonical: p.canonical(),
        }),
    }
}

fn endo_out<C: crate::coeffs::Coeff>(name: &str, e: &Endomorphism<C>, format: Format) -> String {
    match format {
        Format::Text => e
            .named_images()
            .into_iter()
            .map(|(g, img)| format!("{g} -> {img}\n"))
            .collect(),
        Format::Structured => json(&MapRecord {
            object: name,
            kind: "endomorphism",
            images: e,
        }),
    }
}

fn derivation_out(name: &str, d: &Derivation<Rational>, format: Format) -> String {
    match format {
        Format::Text => d
            .ring()
            .gen_names()
            .iter()
            .zip(d.images())
            .map(|(g, img)| format!("{g} -> {}\n", img.canonical()))
            .collect(),
        Format::Structured => json(&MapRecord {
            object: name,
            kind: "derivation",
            images: d,
        }),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

pub fn emit(object: Object, format: Format) -> Result<String> {
    let name = object.name();
    let (f, r, g) = base_polys::<Rational>();
    Ok(match object {
        Object::F => poly_out(name, &f, format),
        Object::R => poly_out(name, &r, format),
        Object::G => poly_out(name, &g, format),
        Object::Delta => derivation_out(name, &delta(), format),
        Object::DeltaPrime => derivation_out(name, &delta_prime(), format),
        Object::Phi => endo_out(name, &phi(&u()), format),
        Object::PhiPrime => endo_out(name, &phi_prime(&u()), format),
        Object::Pi => endo_out(name, &pi_map::<Rational>(), format),
        Object::Beta => endo_out(name, &beta(&u())?, format),
    })
}

pub fn emit_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => to_text(reports),
        Format::Structured => {
            let mut s = to_json(reports);
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_text() {
        assert_eq!(emit(Object::F, Format::Text).unwrap(), "x1*x3 - x2^2\n");
    }

    #[test]
    fn names_round_trip() {
        for o in Object::ALL {
            assert_eq!(o.name().parse::<Object>().unwrap(), o);
        }
        assert!(matches!(
            "psi".parse::<Object>(),
            Err(Error::UnknownObject(_))
        ));
    }

    #[test]
    fn structured_polynomial_fields() {
        let s = emit(Object::R, Format::Structured).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["object"], "r");
        assert_eq!(v["ring"], "three_vars");
        assert_eq!(v["terms"], 3);
    }
}
