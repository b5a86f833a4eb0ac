//! Identities for `Δ`, the scalings, the lifted flow `φ'_u` and `π`.

use crate::coeffs::{Coeff, ParamFraction, ParamSymbol, Rational, SymbolSet};
use crate::derivation::Endomorphism;
use crate::error::Result;
use crate::objects::{base_polys, beta, beta_inverse, delta, phi, phi_prime, pi_map};
use crate::pclass::{classify, ClassIndex};
use crate::poly::{gen, parse, parse_param, Polynomial, Ring};

use super::report::Report;

type Q = Rational;
type Pf = ParamFraction;

/// The three nontrivial coordinate images of `φ'_u`, in display order.
pub const PHI_PRIME_DISPLAY: [&str; 3] = [
    "x1 - 2*u*tr*tf + u^2*tf^2*tg",
    "x2 + 4*u*x1*tr - u*tg - 4*u^2*tr^2*tf - 2*u^2*x1*tf*tg + 4*u^3*tr*tf^2*tg - u^4*tf^3*tg^2",
    "x3 + 6*u*x2*tr + 2*u*tf^2 - 3*u^2*x2*tf*tg + 12*u^2*x1*tr^2 - 3*u^2*tr*tg \
     + 2*u^3*tf*tg^2 - 8*u^3*tr^3*tf - 12*u^3*x1*tr*tf*tg + 3*u^4*x1*tf^2*tg^2 \
     + 12*u^4*tr^2*tf^2*tg - 6*u^5*tr*tf^3*tg^2 + u^6*tf^4*tg^3",
];

pub const PHI_PRIME_TERMS: [usize; 3] = [3, 7, 13];

fn uv() -> SymbolSet {
    SymbolSet::of(&[ParamSymbol::U, ParamSymbol::V])
}

fn sym(s: ParamSymbol) -> Pf {
    Pf::symbol(s, true)
}

fn p3(src: &str) -> Polynomial<Q> {
    parse(src, Ring::Three).expect("literal")
}

fn pf(src: &str, ring: Ring) -> Polynomial<Pf> {
    parse_param(src, ring, uv()).expect("literal")
}

fn eq_report<C: Coeff>(id: &str, expected: &Polynomial<C>, computed: &Polynomial<C>) -> Report {
    Report::compare(id, expected.canonical(), computed.canonical())
}

fn guarded(id: &str, f: impl FnOnce() -> Result<Vec<Report>>) -> Vec<Report> {
    f().unwrap_or_else(|e| vec![Report::fail(id, e.to_string())])
}

fn endo_report<C: Coeff>(id: &str, lhs: &Endomorphism<C>, rhs: &Endomorphism<C>) -> Report {
    let l: Vec<String> = lhs.images().iter().map(|p| p.canonical()).collect();
    let r: Vec<String> = rhs.images().iter().map(|p| p.canonical()).collect();
    Report::compare(id, r.join(" ; "), l.join(" ; "))
}

/// Jacobian derivation on the coordinates and on `f`, `r`, `g`.
pub fn delta_checks() -> Vec<Report> {
    guarded("delta", || {
        let (f, r, g) = base_polys::<Q>();
        let d = delta::<Q>();
        let x1 = p3("x1");
        let x2 = p3("x2");
        let want = [
            ("delta(x1)", &p3("-2") * &(&r * &f)),
            ("delta(x2)", &(&p3("4") * &(&x1 * &r)) - &g),
            (
                "delta(x3)",
                &(&p3("6") * &(&x2 * &r)) + &(&p3("2") * &f.pow(2)),
            ),
        ];
        let mut out: Vec<Report> = want
            .iter()
            .enumerate()
            .map(|(i, (id, w))| eq_report(id, w, d.image(i)))
            .collect();
        out.push(eq_report("delta(r)", &-&(&f * &g), &d.derive(&r)?));
        out.push(eq_report(
            "delta(f)",
            &Polynomial::zero(Ring::Three),
            &d.derive(&f)?,
        ));
        out.push(eq_report(
            "delta(g)",
            &Polynomial::zero(Ring::Three),
            &d.derive(&g)?,
        ));
        Ok(out)
    })
}

/// `β_u` scales `f, r, g` by `u^4, u^6, u^9`, and `β_u ∘ Δ = u^7 Δ ∘ β_u` on
/// the coordinates.
pub fn scaling_checks() -> Vec<Report> {
    guarded("beta", || {
        let u = sym(ParamSymbol::U);
        let b = beta(&u)?;
        let (f, r, g) = base_polys::<Pf>();
        let mut out = Vec::new();
        for (name, p, e) in [("f", &f, 4), ("r", &r, 6), ("g", &g, 9)] {
            let want = p.scale(&u.pow(e));
            out.push(eq_report(&format!("beta({name})"), &want, &b.apply(p)?));
        }
        let d = delta::<Pf>();
        for i in 0..3 {
            let lhs = b.apply(d.image(i))?;
            let rhs = d.derive(b.image(i))?.scale(&u.pow(7));
            out.push(eq_report(&format!("beta.delta(x{})", i + 1), &rhs, &lhs));
        }
        Ok(out)
    })
}

/// `β_v ∘ φ_u ∘ β_v^{-1} = φ_{u v^7}` with `u`, `v` symbolic.
pub fn conjugation_check() -> Vec<Report> {
    guarded("conjugation", || {
        let (u, v) = (sym(ParamSymbol::U), sym(ParamSymbol::V));
        let lhs = beta(&v)?.compose(&phi(&u).compose(&beta_inverse(&v, Ring::Three)?)?)?;
        let rhs = phi(&(u * &v.pow(7)));
        Ok(vec![endo_report("conjugation", &lhs, &rhs)])
    })
}

/// The lifted flow: coordinate images, term counts, leading terms, classes,
/// and the images of `tr`, `tf`, `tg`.
pub fn phi_prime_checks() -> Vec<Report> {
    guarded("phi_prime", || {
        let u = sym(ParamSymbol::U);
        let pp = phi_prime(&u);
        let mut out = Vec::new();
        for i in 0..3 {
            let id = format!("phi_prime(x{})", i + 1);
            let img = pp.image(i);
            out.push(eq_report(&id, &pf(PHI_PRIME_DISPLAY[i], Ring::Six), img));
            out.push(Report::compare(
                format!("{id}.terms"),
                PHI_PRIME_TERMS[i].to_string(),
                img.len().to_string(),
            ));
            let k = i as u32 + 1;
            let sign = if k % 2 == 1 { "" } else { "-" };
            let want_lt = pf(&format!("{sign}u^{}*tf^{}*tg^{k}", 2 * k, k + 1), Ring::Six);
            let lt = img.leading_term()?;
            let got_lt = Polynomial::monomial(Ring::Six, lt.monomial, lt.coeff);
            out.push(eq_report(&format!("{id}.lt"), &want_lt, &got_lt));
            let want = ClassIndex::new(k as u64, k as u64 + 1);
            let got = classify(img)?;
            out.push(
                Report::compare(
                    format!("{id}.class"),
                    want.to_string(),
                    got.map_or("none".into(), |c| c.to_string()),
                )
                .with_class(want),
            );
        }
        for (g, want) in [(gen::TR, "tr - u*tf*tg"), (gen::TF, "tf"), (gen::TG, "tg")] {
            let id = format!("phi_prime({})", Ring::Six.gen_names()[g]);
            out.push(eq_report(&id, &pf(want, Ring::Six), pp.image(g)));
        }
        Ok(out)
    })
}

/// `π ∘ φ'_u = φ_u ∘ π` with `u` symbolic.
pub fn pi_check() -> Vec<Report> {
    guarded("pi", || {
        let u = sym(ParamSymbol::U);
        let pi = pi_map::<Pf>();
        let lhs = pi.compose(&phi_prime(&u))?;
        let rhs = phi(&u).compose(&pi)?;
        Ok(vec![endo_report("pi.phi_prime", &lhs, &rhs)])
    })
}

pub fn verify_foundations() -> Vec<Report> {
    let mut out = delta_checks();
    out.extend(scaling_checks());
    out.extend(conjugation_check());
    out.extend(phi_prime_checks());
    out.extend(pi_check());
    out
}

/// Canonical text of the three lifted coordinate images, one per line.
pub fn phi_prime_canonical() -> String {
    let pp = phi_prime(&sym(ParamSymbol::U));
    (0..3)
        .map(|i| format!("{}\n", pp.image(i).canonical()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_strings_parse_with_expected_counts() {
        for (s, n) in PHI_PRIME_DISPLAY.iter().zip(PHI_PRIME_TERMS) {
            assert_eq!(pf(s, Ring::Six).len(), n);
        }
    }

    #[test]
    fn delta_block_passes() {
        for r in delta_checks() {
            assert!(r.passed(), "{}", r.line());
        }
    }
}
