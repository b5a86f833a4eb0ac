//! The fixed roster of affine-map shapes and what the harness expects of
//! `φ'_u ∘ α'` on `tr`, `tf`, `tg` for each.
//!
//! Matrix entries are written as expressions in the free parameters. An
//! entry equal to its own name is free. Entries may refer to other entries;
//! they are resolved in dependency order. `P`, `Q`, `S`, `T` inside expected
//! expressions mean the derived values of the map unless the case makes them
//! free or defines them.

use crate::coeffs::{ParamSymbol, SymbolSet};
use crate::error::{Error, Result};
use crate::objects::{AffineType, ModifiedLift};
use crate::pclass::{CWitness, ClassIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    Hat,
    Modified(ModifiedLift),
}

/// Class and leading coefficient of one image.
#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub class: ClassIndex,
    pub coeff: String,
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: String,
    pub group: &'static str,
    /// Entries `a1..a3, b1..b3, c1..c3, d1..d3`.
    pub entries: [String; 12],
    /// Definitions of `P`, `Q`, `S` or `T` used by the entries.
    pub defs: Vec<(ParamSymbol, String)>,
    pub invertible: SymbolSet,
    /// Expressions that must reduce to zero after substitution.
    pub vanishing: Vec<String>,
    /// Expressions assumed nonzero.
    pub generic: Vec<String>,
    pub identities: Vec<(String, String)>,
    pub lift: LiftKind,
    pub ty: AffineType,
    /// Expectations for the images of `tr`, `tf`, `tg`.
    pub images: Option<[Expected; 3]>,
    pub witness: Option<CWitness>,
    /// Expected lift images, by generator index.
    pub lift_images: Vec<(usize, String)>,
    /// For maps that are scalings: the expected scale.
    pub in_b: Option<String>,
}

fn syms(list: &str) -> SymbolSet {
    let v: Vec<ParamSymbol> = list
        .split_whitespace()
        .map(|n| ParamSymbol::from_name(n).unwrap_or_else(|| panic!("unknown symbol {n}")))
        .collect();
    SymbolSet::of(&v)
}

fn entry_index(name: &str) -> usize {
    let s = ParamSymbol::from_name(name).unwrap_or_else(|| panic!("unknown symbol {name}"));
    assert!(
        s.index() < 12,
        "{name} is not a matrix or translation entry"
    );
    s.index()
}

impl CaseSpec {
    fn new(id: impl Into<String>, group: &'static str, ty: [u8; 3]) -> Self {
        CaseSpec {
            id: id.into(),
            group,
            entries: std::array::from_fn(|i| ParamSymbol::ALL[i].name().to_string()),
            defs: Vec::new(),
            invertible: syms("u"),
            vanishing: Vec::new(),
            generic: Vec::new(),
            identities: Vec::new(),
            lift: LiftKind::Hat,
            ty: AffineType(ty),
            images: None,
            witness: None,
            lift_images: Vec::new(),
            in_b: None,
        }
    }

    fn set(mut self, pairs: &[(&str, &str)]) -> Self {
        for (k, v) in pairs {
            self.entries[entry_index(k)] = v.to_string();
        }
        self
    }

    fn zero(self, names: &str) -> Self {
        let pairs: Vec<(&str, &str)> = names.split_whitespace().map(|n| (n, "0")).collect();
        self.set(&pairs)
    }

    fn def(mut self, name: &str, expr: &str) -> Self {
        self.defs
            .push((ParamSymbol::from_name(name).unwrap(), expr.to_string()));
        self
    }

    fn inv(mut self, list: &str) -> Self {
        self.invertible = self.invertible.union(syms(list));
        self
    }

    fn vanish(mut self, exprs: &[&str]) -> Self {
        self.vanishing.extend(exprs.iter().map(|s| s.to_string()));
        self
    }

    fn generic(mut self, exprs: &[&str]) -> Self {
        self.generic.extend(exprs.iter().map(|s| s.to_string()));
        self
    }

    fn identity(mut self, lhs: &str, rhs: &str) -> Self {
        self.identities.push((lhs.to_string(), rhs.to_string()));
        self
    }

    fn expect(
        mut self,
        r: ((u64, u64), String),
        f: ((u64, u64), String),
        g: ((u64, u64), String),
    ) -> Self {
        let e = |((gamma, delta), coeff): ((u64, u64), String)| Expected {
            class: ClassIndex::new(gamma, delta),
            coeff,
        };
        self.witness = Some(CWitness::from_classes(
            ClassIndex::new(r.0 .0, r.0 .1),
            ClassIndex::new(f.0 .0, f.0 .1),
            ClassIndex::new(g.0 .0, g.0 .1),
        ));
        self.images = Some([e(r), e(f), e(g)]);
        self
    }

    fn modified(mut self, m: ModifiedLift) -> Self {
        self.lift = LiftKind::Modified(m);
        self
    }

    fn lift_image(mut self, gen: usize, text: &str) -> Self {
        self.lift_images.push((gen, text.to_string()));
        self
    }

    /// Names of the images: `R, F, G`, primed under a modified lift.
    pub fn image_names(&self) -> [&'static str; 3] {
        match self.lift {
            LiftKind::Hat => ["R", "F", "G"],
            LiftKind::Modified(_) => ["R'", "F", "G'"],
        }
    }
}

fn s(x: &str) -> String {
    x.to_string()
}

const K1: &str = "c1*c3 - c2^2";
const K2: &str = "b1*c3 - 2*b2*c2 + b3*c1";
const K3: &str = "a1*c3 - 2*a2*c2 + a3*c1 + b1*b3 - b2^2";
const K4: &str = "a1*b3 - 2*a2*b2 + a3*b1";

/// Every quadratic `x`-coefficient of `α̂(tf)`.
const KS: [&str; 4] = [K1, K2, K3, K4];

fn l2_cases() -> Vec<CaseSpec> {
    vec![
        CaseSpec::new("L2.A", "L2.A", [3, 2, 3])
            .zero("c2")
            .inv("c1 c3 b2")
            .vanish(&["c2"])
            .expect(
                ((8, 11), s("-b2*c1*c3*u^16")),
                ((6, 8), s("c1*c3*u^12")),
                ((15, 20), s("c1^2*c3^3*u^30")),
            ),
        CaseSpec::new("L2.B", "L2.B", [3, 3, 2])
            .zero("c3")
            .inv("c1 c2 b3")
            .vanish(&["c3"])
            .expect(
                ((9, 12), s("-c2^3*u^18")),
                ((6, 8), s("-c2^2*u^12")),
                ((14, 19), s("-b3*c2^4*u^28")),
            ),
    ]
}

fn l3_cases() -> Vec<CaseSpec> {
    vec![
        CaseSpec::new("L3.32", "L3.32", [3, 2, 2])
            .zero("c2 c3")
            .inv("c1 b2 b3")
            .vanish(&[K1])
            .expect(
                ((7, 10), s("b2*b3*c1*u^14")),
                ((5, 7), s("-b3*c1*u^10")),
                ((12, 17), s("-b3^3*c1^2*u^24")),
            ),
        CaseSpec::new("L3.23", "L3.23", [2, 2, 3])
            .zero("c1 c2")
            .inv("c3 b1 b2")
            .vanish(&[K1])
            .expect(
                ((7, 10), s("b1*b2*c3*u^14")),
                ((5, 7), s("-b1*c3*u^10")),
                ((13, 18), s("b1^2*c3^3*u^26")),
            ),
    ]
}

fn l4_cases() -> Vec<CaseSpec> {
    let base = |id: &str, group| {
        CaseSpec::new(id, group, [3, 2, 1])
            .zero("c2 c3 b3")
            .inv("c1 b2")
            .vanish(&[K1, K2])
    };
    let mut out = vec![base("L4.i", "L4.i")
        .inv("a3")
        .generic(&["a3*c1 - b2^2"])
        .expect(
            ((6, 9), s("-b2*(a3*c1 - b2^2)*u^12")),
            ((4, 6), s("(a3*c1 - b2^2)*u^8")),
            ((9, 14), s("a3*(a3*c1 - b2^2)^2*u^18")),
        )];
    // a3 = b2^2/c1 removes the x2^2 coefficient; then lower coefficients of
    // α̂(tf) are switched off one at a time
    let chain: [(&str, &[(&str, &str)], &str, &str); 6] = [
        ("(3,5)", &[], K4, "-(a1*b3 - 2*a2*b2 + a3*b1)*u^6"),
        ("(3,4)", &[("b1", "2*a2*c1/b2")], "d3", "c1*d3*u^6"),
        (
            "(2,4)",
            &[("b1", "2*a2*c1/b2"), ("d3", "0")],
            "a1*a3 - a2^2",
            "(a1*a3 - a2^2)*u^4",
        ),
        (
            "(2,3)",
            &[("b1", "2*a2*c1/b2"), ("d3", "0"), ("a1", "a2^2*c1/b2^2")],
            "d2",
            "2*b2*d2*u^4",
        ),
        (
            "(1,2)",
            &[
                ("b1", "2*a2*c1/b2"),
                ("d3", "0"),
                ("a1", "a2^2*c1/b2^2"),
                ("d2", "0"),
            ],
            "d1",
            "a3*d1*u^2",
        ),
        (
            "(0,1)",
            &[
                ("b1", "2*a2*c1/b2"),
                ("d3", "0"),
                ("a1", "a2^2*c1/b2^2"),
                ("d2", "0"),
                ("d1", "0"),
            ],
            "1",
            "a3*c1",
        ),
    ];
    for (tag, sets, gen, lt) in chain {
        let (g, d) = parse_tag(tag);
        out.push(
            base(&format!("L4.ii{tag}"), "L4.ii")
                .set(&[("a3", "b2^2/c1")])
                .set(sets)
                .vanish(&["a3*c1 - b2^2"])
                .generic(&[gen])
                .expect(
                    ((6, 8), s("c1^2*u^12")),
                    ((g, d), s(lt)),
                    ((9, 12), s("c1^3*u^18")),
                ),
        );
    }
    out
}

fn parse_tag(tag: &str) -> (u64, u64) {
    let inner = tag.trim_matches(|c| c == '(' || c == ')');
    let (a, b) = inner.split_once(',').unwrap();
    (a.parse().unwrap(), b.parse().unwrap())
}

fn l5_cases() -> Vec<CaseSpec> {
    let base = |id: &str, group| {
        CaseSpec::new(id, group, [1, 2, 3])
            .zero("c1 c2 b1")
            .inv("a1 b2 c3")
            .vanish(&[K1, K2])
    };
    let mut out = Vec::new();
    let chain: [(&str, &[(&str, &str)], &str, &str); 6] = [
        ("(4,6)", &[], "a1*c3 - b2^2", "(a1*c3 - b2^2)*u^8"),
        (
            "(3,5)",
            &[("a1", "b2^2/c3")],
            K4,
            "-(a1*b3 - 2*a2*b2 + a3*b1)*u^6",
        ),
        (
            "(3,4)",
            &[("a1", "b2^2/c3"), ("b3", "2*a2*c3/b2")],
            "d1",
            "c3*d1*u^6",
        ),
        (
            "(2,4)",
            &[("a1", "b2^2/c3"), ("b3", "2*a2*c3/b2"), ("d1", "0")],
            "a1*a3 - a2^2",
            "(a1*a3 - a2^2)*u^4",
        ),
        (
            "(2,3)",
            &[
                ("a1", "b2^2/c3"),
                ("b3", "2*a2*c3/b2"),
                ("d1", "0"),
                ("a3", "a2^2*c3/b2^2"),
            ],
            "d2",
            "2*b2*d2*u^4",
        ),
        (
            "(1,2)",
            &[
                ("a1", "b2^2/c3"),
                ("b3", "2*a2*c3/b2"),
                ("d1", "0"),
                ("a3", "a2^2*c3/b2^2"),
                ("d2", "0"),
            ],
            "d3",
            "a1*d3*u^2",
        ),
    ];
    for (tag, sets, gen, lt) in chain {
        let (g, d) = parse_tag(tag);
        out.push(
            base(&format!("L5.i{tag}"), "L5.i")
                .set(sets)
                .generic(&[gen])
                .expect(
                    ((2 + g, 3 + d), format!("-b2*u^4*({lt})")),
                    ((g, d), s(lt)),
                    ((3 + 2 * g, 4 + 2 * d), format!("c3*u^6*({lt})^2")),
                ),
        );
    }
    let fixed = [
        ("a1", "b2^2/c3"),
        ("b3", "2*a2*c3/b2"),
        ("a3", "a2^2*c3/b2^2"),
        ("d1", "0"),
        ("d2", "0"),
        ("d3", "0"),
    ];
    out.push(
        base("L5.ii", "L5.ii")
            .set(&fixed)
            .vanish(&[K3, K4, "a1*a3 - a2^2"])
            .generic(&["b2 - c3^2"])
            .identity("a1 - 2*b2*c3 + c3^3", "(b2 - c3^2)^2/c3")
            .identity("a1 - b2*c3", "b2*(b2 - c3^2)/c3")
            .expect(
                ((2, 4), s("u^4*a1*(a1 - b2*c3)")),
                ((0, 1), s("a1*c3")),
                ((3, 6), s("u^6*a1^2*(a1 - 2*b2*c3 + c3^3)")),
            ),
    );
    let special = [
        ("b2", "c3^2"),
        ("a1", "c3^3"),
        ("a2", "b3*c3/2"),
        ("a3", "b3^2/(4*c3)"),
        ("d1", "0"),
        ("d2", "0"),
        ("d3", "0"),
    ];
    out.push(
        base("L5.iii", "L5.iii")
            .set(&special)
            .inv("b3")
            .vanish(&[K3, K4, "a1*a3 - a2^2", "b2 - c3^2", "a1 - b2*c3"])
            .generic(&["b3"])
            .modified(ModifiedLift::TypeOneTwoThree)
            .lift_image(crate::poly::gen::TR, "1/2*b3*c3^5*x1*tf + c3^6*tr")
            .lift_image(
                crate::poly::gen::TG,
                "a3*c3^8*x1*tf^2 + b3*c3^8*tr*tf + c3^9*tg",
            )
            .identity("a2*c3^4", "b3*c3^5/2")
            .identity("a3*c3^8", "b3^2*c3^7/4")
            .expect(
                ((1, 3), s("a2*c3^4*u^2")),
                ((0, 1), s("c3^4")),
                ((1, 4), s("a3*c3^8*u^2")),
            ),
    );
    let mut scaling = base("L5.iv", "L5.iv")
        .set(&[("b2", "c3^2"), ("a1", "c3^3")])
        .zero("a2 a3 b3 d1 d2 d3")
        .vanish(&[K3, K4, "a1*a3 - a2^2", "b2 - c3^2", "a1 - b2*c3"]);
    scaling.in_b = Some(s("c3"));
    out.push(scaling);
    out
}

fn l6_cases() -> Vec<CaseSpec> {
    let base = |id: &str, group| CaseSpec::new(id, group, [3, 3, 3]).inv("c1 c2 c3");
    let mut out = Vec::new();
    let c3 = ("c3", "c2^2/c1");
    let b3 = ("b3", "(2*b2*c2 - b1*c3)/c1");
    let a3 = ("a3", "(2*a2*c2 - a1*c3 + b2^2 - b1*b3)/c1");
    let chain: [(&str, Vec<(&str, &str)>, &str, String); 4] = [
        ("(6,8)", vec![], K1, format!("({K1})*u^12")),
        ("(5,7)", vec![c3], K2, format!("-({K2})*u^10")),
        ("(4,6)", vec![c3, b3], K3, format!("({K3})*u^8")),
        ("(3,5)", vec![c3, b3, a3], K4, format!("-({K4})*u^6")),
    ];
    for (tag, sets, gen, lt) in chain {
        let (g, d) = parse_tag(tag);
        out.push(
            base(&format!("L6.i{tag}"), "L6.i")
                .set(&sets)
                .generic(&[gen])
                .expect(
                    ((3 + g, 4 + d), format!("c2*u^6*({lt})")),
                    ((g, d), lt.clone()),
                    ((3 + 2 * g, 4 + 2 * d), format!("c3*u^6*({lt})^2")),
                ),
        );
    }

    // every quadratic coefficient of α̂(tf) vanishes and P = 0
    let a2 = ("a2", "a1*c2/c1 + b1*(b2 - b1*c2/c1)/(2*c1)");
    let d3 = ("d3", "(2*c2*d2 - c3*d1)/c1");
    let ii: [(&str, Vec<(&str, &str)>, &str, &str); 4] = [
        ("(2,4)", vec![], "a1*a3 - a2^2", "(a1*a3 - a2^2)*u^4"),
        (
            "(2,3)",
            vec![("a1", "b1^2/(4*c1)")],
            "c1*d2 - c2*d1",
            "-Q*u^4",
        ),
        (
            "(1,2)",
            vec![("a1", "b1^2/(4*c1)"), ("d2", "c2*d1/c1")],
            "d1",
            "S*u^2",
        ),
        (
            "(0,1)",
            vec![("a1", "b1^2/(4*c1)"), ("d2", "c2*d1/c1"), ("d1", "0")],
            "1",
            "a1*c3 - 2*a2*c2 + a3*c1",
        ),
    ];
    for (tag, sets, gen, lt) in ii {
        let (g, d) = parse_tag(tag);
        let mut c = base(&format!("L6.ii{tag}"), "L6.ii")
            .set(&[c3, b3, a2, a3, d3])
            .set(&sets)
            .vanish(&KS)
            .vanish(&["P"])
            .generic(&["b1*c2 - b2*c1", gen])
            .expect(
                ((6, 8), s("c1^2*u^12")),
                ((g, d), s(lt)),
                ((9, 12), s("c1^3*u^18")),
            );
        c = match tag {
            "(2,4)" => c.identity(
                "a1*a3 - a2^2",
                "(4*a1*c1 - b1^2)*(b1*c2 - b2*c1)^2/(4*c1^4)",
            ),
            "(2,3)" => c.identity("Q", "2*(b1*c2 - b2*c1)*(c1*d2 - c2*d1)/c1^2"),
            "(1,2)" => c.vanish(&["Q"]).identity("S", "d1*(b1*c2 - b2*c1)^2/c1^3"),
            _ => c.identity("a1*c3 - 2*a2*c2 + a3*c1", "(b1*c2 - b2*c1)^2/c1^2"),
        };
        out.push(c);
    }

    // P becomes a free unit
    let d3p = ("d3", "(P + 2*c2*d2 - c3*d1)/c1");
    out.push(
        base("L6.iii", "L6.iii")
            .set(&[c3, b3, a2, a3, d3p])
            .inv("P")
            .vanish(&KS)
            .generic(&["P*c2 + c1^2", "b1*c2 - b2*c1"])
            .identity("c1*d3 - 2*c2*d2 + c3*d1", "P")
            .identity("P^2*c3 + 2*P*c1*c2 + c1^3", "(P*c2 + c1^2)^2/c1")
            .expect(
                ((6, 8), s("u^12*(P*c2 + c1^2)")),
                ((3, 4), s("P*u^6")),
                ((9, 12), s("u^18*(P^2*c3 + 2*P*c1*c2 + c1^3)")),
            ),
    );

    // P c2 + c1^2 = 0
    let c_row = [("c2", "-c1^2/P"), ("c3", "c1^3/P^2")];
    let b3p = ("b3", "-b1*c1^2/P^2 - 2*b2*c1/P");
    let a2p = ("a2", "(P*b1*b2 + b1^2*c1 - 2*a1*c1^2)/(2*P*c1)");
    let a3p = (
        "a3",
        "(P^2*b2^2 - 2*P*a2*c1^2 + 2*P*b1*b2*c1 - a1*c1^3 + b1^2*c1^2)/(P^2*c1)",
    );
    let base_iv = |id: &str, group| {
        base(id, group)
            .set(&c_row)
            .set(&[b3p, a2p, a3p, d3p])
            .inv("P")
            .vanish(&KS)
            .vanish(&["P*c2 + c1^2"])
            .identity("c1*d3 - 2*c2*d2 + c3*d1", "P")
    };
    out.push(
        base_iv("L6.iv", "L6.iv")
            .generic(&["a1*a3 - a2^2", "P*b2 + b1*c1"])
            .identity(
                "a1*a3 - a2^2",
                "(P*b2 + b1*c1)^2*(4*a1*c1 - b1^2)/(4*P^2*c1^2)",
            )
            .expect(
                ((5, 8), s("-u^10*c1^2*(a1*a3 - a2^2)/P")),
                ((3, 4), s("P*u^6")),
                ((7, 12), s("u^14*c1^3*(a1*a3 - a2^2)^2/P^2")),
            ),
    );
    let e = "P^2*b2 + 2*P*b1*c1 - Q*c1^2";
    out.push(
        base_iv("L6.v", "L6.v")
            .set(&[("a1", "b1^2/(4*c1)")])
            .vanish(&["a1*a3 - a2^2"])
            .generic(&[e, "P*b2 + b1*c1"])
            .expect(
                ((5, 7), format!("-u^10*({e})/P")),
                ((3, 4), s("P*u^6")),
                ((7, 10), format!("u^14*({e})^2/(P^2*c1)")),
            ),
    );

    // e = 0 as well: rows in b1, c1, P, T and d1, modified lift
    let rows_vi: [(&str, &str); 11] = [
        ("c2", "-c1^2/P"),
        ("c3", "c1^3/P^2"),
        ("b2", "-T*c1/P^2 - b1*c1/P"),
        ("b3", "2*T*c1^2/P^3 + b1*c1^2/P^2"),
        ("a1", "b1^2/(4*c1)"),
        ("a2", "-T*b1/(2*P^2) - b1^2/(4*P)"),
        ("a3", "T^2*c1/P^4 + T*b1*c1/P^3 + b1^2*c1/(4*P^2)"),
        ("d2", "-(P^3 + 2*c1^3*d1)/(2*P*c1^2)"),
        ("d3", "(2*P^3 + c1^3*d1)/(P^2*c1)"),
        ("d1", "d1"),
        ("c1", "c1"),
    ];
    let g_vi = "u^12*(P^2*d3 + 2*P*c1*d2 + c1^2*d1)";
    let base_vi = |id: &str, group| {
        base(id, group)
            .set(&rows_vi)
            .inv("P T")
            .modified(ModifiedLift::TypeThreeThreeThree)
            .vanish(&KS)
            .vanish(&["P*c2 + c1^2", "a1*a3 - a2^2", e])
            .identity("c1*d3 - 2*c2*d2 + c3*d1", "P")
            .identity("b1*d3 - 2*b2*d2 + b3*d1", "(P*b1 - T)/c1")
            .identity("P^2*d3 + 2*P*c1*d2 + c1^2*d1", "P^3/c1")
    };
    let r_vi = "P^2*b1^2 - 4*P*S*c1^2 - 2*P*T*b1 + 4*T^2";
    out.push(base_vi("L6.vi", "L6.vi").generic(&[r_vi]).expect(
        ((4, 6), format!("u^8*({r_vi})/(4*P^2)")),
        ((3, 4), s("P*u^6")),
        ((6, 8), s(g_vi)),
    ));
    out.push(
        base_vi("L6.vii", "L6.vii")
            .set(&[("d1", "P^3/c1^3")])
            .vanish(&[r_vi])
            .generic(&["P^2*T - c1^5"])
            .identity("S", "(P^2*b1^2 - 2*P*T*b1 + 4*T^2)/(4*P*c1^2)")
            .identity("d2", "-3*P^2/(2*c1^2)")
            .identity("d3", "3*P/c1")
            .expect(
                ((3, 5), s("u^6*T^2*(P^2*T - c1^5)/(P^5*c1)")),
                ((3, 4), s("P*u^6")),
                ((6, 8), s(g_vi)),
            ),
    );
    out.push(
        base_vi("L6.viii", "L6.viii")
            .set(&[("d1", "P^3/c1^3")])
            .def("T", "c1^5/P^2")
            .vanish(&[r_vi, "P^2*T - c1^5"])
            .expect(
                ((3, 4), s("-P^3*u^6/(4*c1^2)")),
                ((3, 4), s("P*u^6")),
                ((6, 8), s(g_vi)),
            ),
    );
    out
}

/// All cases, branches included, in roster order.
pub fn roster() -> Vec<CaseSpec> {
    let mut v = l2_cases();
    v.extend(l3_cases());
    v.extend(l4_cases());
    v.extend(l5_cases());
    v.extend(l6_cases());
    v
}

/// Cases selected by a group id (`L4.ii`) or a branch id (`L4.ii(3,4)`).
pub fn lookup(id: &str) -> Result<Vec<CaseSpec>> {
    let v: Vec<CaseSpec> = roster()
        .into_iter()
        .filter(|c| c.group == id || c.id == id)
        .collect();
    if v.is_empty() {
        Err(Error::UnknownCase(id.to_string()))
    } else {
        Ok(v)
    }
}

/// Group ids in roster order.
pub fn groups() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for c in roster() {
        if !out.contains(&c.group) {
            out.push(c.group);
        }
    }
    out
}
