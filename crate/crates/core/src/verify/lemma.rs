//! Drivers for the case roster: symbolic replay over parameter fractions and
//! seeded numeric replay over the rationals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{Coeff, ParamFraction, ParamSymbol, Rational, SymbolSet, ROSTER_LEN};
use crate::derivation::Endomorphism;
use crate::error::{Error, Result};
use crate::objects::{affine_type, hat_lift, in_b, is_lift, modified_lift, phi_prime, AffineMap};
use crate::pclass::{classify, small_rational, witness_from_images, CWitness, ClassIndex};
use crate::poly::{gen, parse_param, Polynomial, Ring};

use super::cases::{lookup, CaseSpec, LiftKind};
use super::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Numeric { seed: u64, trials: u32 },
}

/// A case with every entry resolved to a fraction in its free parameters.
pub struct Instance<'a> {
    pub spec: &'a CaseSpec,
    values: [Option<ParamFraction>; ROSTER_LEN],
    pub free: Vec<ParamSymbol>,
    pub alpha: AffineMap<ParamFraction>,
}

fn constant_of(p: &Polynomial<ParamFraction>, src: &str) -> Result<ParamFraction> {
    let mut out = ParamFraction::zero();
    for (m, c) in p.iter() {
        if !m.is_one() {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("`{src}` is not a parameter expression"),
            });
        }
        out = c.clone();
    }
    Ok(out)
}

fn parse_expr(src: &str) -> Result<ParamFraction> {
    let p = parse_param(src, Ring::Three, SymbolSet::all())?;
    constant_of(&p, src)
}

fn is_entry(s: ParamSymbol) -> bool {
    s.index() < 12
}

impl<'a> Instance<'a> {
    pub fn new(spec: &'a CaseSpec) -> Result<Self> {
        let inv = spec.invertible;
        let mut values: [Option<ParamFraction>; ROSTER_LEN] = Default::default();
        let mut free = SymbolSet::EMPTY.with(ParamSymbol::U);
        let mut pending: Vec<(ParamSymbol, ParamFraction)> = Vec::new();
        for (i, src) in spec.entries.iter().enumerate() {
            pending.push((ParamSymbol::ALL[i], parse_expr(src)?));
        }
        for (s, src) in &spec.defs {
            pending.push((*s, parse_expr(src)?));
        }
        let defined = |s: ParamSymbol| is_entry(s) || spec.defs.iter().any(|(d, _)| *d == s);
        // entries equal to their own name, and undefined leaves, are free
        for (s, pf) in &pending {
            if *pf == ParamFraction::symbol(*s, false) {
                free = free.with(*s);
            }
            for t in pf.symbols().iter() {
                if !defined(t) {
                    free = free.with(t);
                }
            }
        }
        for s in free.iter() {
            values[s.index()] = Some(ParamFraction::symbol(s, inv.contains(s)));
        }
        pending.retain(|(s, _)| !free.contains(*s));
        while !pending.is_empty() {
            let ready = pending
                .iter()
                .position(|(_, pf)| pf.symbols().iter().all(|t| values[t.index()].is_some()));
            let Some(i) = ready else {
                let names: Vec<&str> = pending.iter().map(|(s, _)| s.name()).collect();
                return Err(Error::CaseConstraintViolated(format!(
                    "{}: circular entries {names:?}",
                    spec.id
                )));
            };
            let (s, pf) = pending.remove(i);
            let v = pf.substitute(&|t| values[t.index()].clone())?;
            values[s.index()] = Some(v);
        }
        let get = |i: usize| values[i].clone().unwrap();
        let alpha = AffineMap::new(
            std::array::from_fn(|r| std::array::from_fn(|c| get(3 * r + c))),
            std::array::from_fn(|c| get(9 + c)),
        );
        Ok(Instance {
            spec,
            values,
            free: free.iter().collect(),
            alpha,
        })
    }

    fn image_of(&self, s: ParamSymbol) -> Option<ParamFraction> {
        if let Some(v) = &self.values[s.index()] {
            return Some(v.clone());
        }
        let dp = self.alpha.derived_params();
        match s {
            ParamSymbol::P => Some(dp.p),
            ParamSymbol::Q => Some(dp.q),
            ParamSymbol::S => Some(dp.s),
            ParamSymbol::T => Some(dp.t),
            _ => None,
        }
    }

    /// A parameter expression in the case's own terms.
    pub fn expr(&self, src: &str) -> Result<ParamFraction> {
        let pf = parse_expr(src)?;
        for s in pf.symbols().iter() {
            if self.image_of(s).is_none() {
                return Err(Error::MissingAssignment(s.name()));
            }
        }
        pf.substitute(&|s| self.image_of(s))
    }

    /// A polynomial with parameter coefficients in the case's own terms.
    pub fn poly(&self, src: &str, ring: Ring) -> Result<Polynomial<ParamFraction>> {
        let p = parse_param(src, ring, SymbolSet::all())?;
        p.try_map_coeffs(|c| c.substitute(&|s| self.image_of(s)))
    }

    pub fn lift<C: Coeff>(&self, alpha: &AffineMap<C>) -> Result<Endomorphism<C>> {
        match self.spec.lift {
            LiftKind::Hat => Ok(hat_lift(alpha)),
            LiftKind::Modified(m) => modified_lift(alpha, m),
        }
    }

    /// Draws nonzero values for the free parameters until the determinant,
    /// the genericity expressions and the expected leading coefficients are
    /// all nonzero.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Result<Assignment> {
        let mut watch = vec![self.alpha.determinant()];
        for g in &self.spec.generic {
            watch.push(self.expr(g)?);
        }
        if let Some(images) = &self.spec.images {
            for e in images {
                watch.push(self.expr(&e.coeff)?);
            }
        }
        for _ in 0..1000 {
            let mut a: Assignment = Default::default();
            for s in &self.free {
                a[s.index()] = Some(small_rational(rng, 7));
            }
            let ok = watch
                .iter()
                .all(|w| matches!(eval(w, &a), Ok(v) if !v.is_zero()));
            if ok {
                return Ok(a);
            }
        }
        Err(Error::CaseConstraintViolated(format!(
            "{}: no admissible sample in 1000 draws",
            self.spec.id
        )))
    }
}

pub type Assignment = [Option<Rational>; ROSTER_LEN];

pub fn eval(pf: &ParamFraction, a: &Assignment) -> Result<Rational> {
    pf.evaluate(&|s| a[s.index()].clone())
}

fn render_assignment(free: &[ParamSymbol], a: &Assignment) -> String {
    free.iter()
        .map(|s| format!("{s}={}", a[s.index()].as_ref().unwrap()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Images of `tr`, `tf`, `tg` under `φ'_u ∘ lift`.
pub fn psi_images<C: Coeff>(lift: &Endomorphism<C>, u: &C) -> Result<[Polynomial<C>; 3]> {
    let phi = phi_prime(u);
    Ok([
        phi.apply(lift.image(gen::TR))?,
        phi.apply(lift.image(gen::TF))?,
        phi.apply(lift.image(gen::TG))?,
    ])
}

fn lt_text<C: Coeff>(p: &Polynomial<C>) -> String {
    match p.leading_term() {
        Ok(t) => Polynomial::monomial(p.ring(), t.monomial, t.coeff).canonical(),
        Err(_) => "0".to_string(),
    }
}

fn expected_lt<C: Coeff>(class: ClassIndex, coeff: C) -> String {
    Polynomial::monomial(Ring::Six, class.monomial(), coeff).canonical()
}

pub fn verify_lemma(id: &str, mode: Mode) -> Result<Vec<Report>> {
    let specs = lookup(id)?;
    let mut out = Vec::new();
    for spec in &specs {
        out.extend(match mode {
            Mode::Symbolic => run_symbolic(spec),
            Mode::Numeric { seed, trials } => run_numeric(spec, seed, trials),
        });
    }
    Ok(out)
}

fn tag(spec: &CaseSpec, what: &str) -> String {
    format!("{}:{what}", spec.id)
}

pub fn run_symbolic(spec: &CaseSpec) -> Vec<Report> {
    match symbolic_reports(spec) {
        Ok(v) => v,
        Err(e) => vec![Report::fail(tag(spec, "setup"), e.to_string())],
    }
}

fn symbolic_reports(spec: &CaseSpec) -> Result<Vec<Report>> {
    let inst = Instance::new(spec)?;
    let alpha = &inst.alpha;
    let mut out = Vec::new();
    let ty = affine_type(alpha, Some(spec.ty));
    out.push(match ty {
        Ok(t) => Report::compare(
            tag(spec, "type"),
            format!("{:?}", spec.ty.0),
            format!("{:?}", t.0),
        ),
        Err(e) => Report::fail(tag(spec, "type"), e.to_string()),
    });
    let det = alpha.determinant();
    out.push(Report::new(tag(spec, "det"), !det.is_zero()).with_computed(det.canonical()));
    for (k, src) in spec.vanishing.iter().enumerate() {
        let v = inst.expr(src)?;
        out.push(Report::compare(
            tag(spec, &format!("vanish[{k}]")),
            "0",
            v.canonical(),
        ));
    }
    for (k, src) in spec.generic.iter().enumerate() {
        let v = inst.expr(src)?;
        out.push(
            Report::new(tag(spec, &format!("generic[{k}]")), !v.is_zero())
                .with_computed(v.canonical()),
        );
    }
    for (k, (l, r)) in spec.identities.iter().enumerate() {
        let (l, r) = (inst.expr(l)?, inst.expr(r)?);
        out.push(Report::compare(
            tag(spec, &format!("identity[{k}]")),
            r.canonical(),
            l.canonical(),
        ));
    }
    if let Some(scale) = &spec.in_b {
        let want = inst.expr(scale)?;
        let got = in_b(alpha).map_or("none".to_string(), |u| u.canonical());
        out.push(Report::compare(tag(spec, "in_B"), want.canonical(), got));
    }
    let u = ParamFraction::symbol(ParamSymbol::U, true);
    if spec.images.is_none() {
        return Ok(out);
    }
    let lift = match inst.lift(alpha) {
        Ok(l) => l,
        Err(e) => {
            out.push(Report::fail(tag(spec, "lift"), e.to_string()));
            return Ok(out);
        }
    };
    if matches!(spec.lift, LiftKind::Modified(_)) {
        out.push(Report::new(tag(spec, "is_lift"), is_lift(&lift, alpha)));
    }
    for (g, text) in &spec.lift_images {
        let want = inst.poly(text, Ring::Six)?;
        out.push(Report::compare(
            tag(spec, &format!("lift({})", Ring::Six.gen_names()[*g])),
            want.canonical(),
            lift.image(*g).canonical(),
        ));
    }
    let images = psi_images(&lift, &u)?;
    out.extend(image_reports(spec, &images, |c| inst.expr(c))?);
    Ok(out)
}

/// Class and leading-term checks for `R, F, G`, then the witness.
fn image_reports<C: Coeff>(
    spec: &CaseSpec,
    images: &[Polynomial<C>; 3],
    expected_coeff: impl Fn(&str) -> Result<C>,
) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let want = spec.images.as_ref().unwrap();
    for ((p, e), name) in images.iter().zip(want).zip(spec.image_names()) {
        let class = classify(p).ok().flatten();
        let want_lt = expected_lt(e.class, expected_coeff(&e.coeff)?);
        let mut r = Report::compare(tag(spec, name), want_lt, lt_text(p));
        if class != Some(e.class) {
            r.status = super::report::Status::Fail;
            r.computed = Some(format!(
                "{} (class {})",
                r.computed.unwrap_or_default(),
                class.map_or("none".to_string(), |c| c.to_string())
            ));
        }
        out.push(r.with_class(e.class));
    }
    let w = witness_from_images(&images[0], &images[1], &images[2]);
    let id = tag(spec, "witness");
    out.push(match (w, spec.witness) {
        (Some(w), Some(exp)) => {
            let mut r = Report::compare(id, exp.to_string(), w.to_string()).with_witness(w);
            if !w.accepts(spec.ty) {
                r.status = super::report::Status::Fail;
                r.computed = Some(format!("{w} violates (c2)/(c3)"));
            }
            r
        }
        (w, exp) => Report::fail(id, format!("expected {exp:?}, classified {w:?}")),
    });
    Ok(out)
}

/// Stable 64-bit hash for per-case stream separation.
fn fnv(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn case_rng(spec_id: &str, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv(spec_id))
}

/// One summary report per case: the first failing trial, or a pass.
pub fn run_numeric(spec: &CaseSpec, seed: u64, trials: u32) -> Vec<Report> {
    let id = tag(spec, "numeric");
    let inst = match Instance::new(spec) {
        Ok(i) => i,
        Err(e) => return vec![Report::fail(id, e.to_string()).with_seed(seed)],
    };
    let mut rng = case_rng(&spec.id, seed);
    for trial in 0..trials {
        let fail = match numeric_trial(&inst, &mut rng) {
            Ok(None) => continue,
            Ok(Some(r)) => r,
            Err(e) => Report::fail(id.clone(), e.to_string()),
        };
        let mut r = fail.with_seed(seed);
        r.id = format!("{id}[trial {trial}]/{}", r.id);
        return vec![r];
    }
    vec![Report::new(id, true)
        .with_seed(seed)
        .with_computed(format!("{trials} trials"))]
}

/// `None` when every check holds at a fresh sample.
fn numeric_trial(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<Option<Report>> {
    let spec = inst.spec;
    let a = inst.sample(rng)?;
    let at = render_assignment(&inst.free, &a);
    let alpha = inst.alpha.try_map_coeffs(|c| eval(c, &a))?;
    let fail =
        |what: &str, e: String, c: String| Some(Report::compare(what, e, format!("{c} at {at}")));
    if let Err(e) = affine_type(&alpha, Some(spec.ty)) {
        return Ok(Some(Report::fail("type", format!("{e} at {at}"))));
    }
    for src in spec.vanishing.iter() {
        let v = eval(&inst.expr(src)?, &a)?;
        if !v.is_zero() {
            return Ok(fail(src, "0".into(), v.to_string()));
        }
    }
    for (l, r) in &spec.identities {
        let (lv, rv) = (eval(&inst.expr(l)?, &a)?, eval(&inst.expr(r)?, &a)?);
        if lv != rv {
            return Ok(fail(l, rv.to_string(), lv.to_string()));
        }
    }
    if let Some(scale) = &spec.in_b {
        let want = eval(&inst.expr(scale)?, &a)?;
        if in_b(&alpha) != Some(want.clone()) {
            return Ok(fail(
                "in_B",
                want.to_string(),
                format!("{:?}", in_b(&alpha)),
            ));
        }
    }
    if spec.images.is_none() {
        return Ok(None);
    }
    let lift = inst.lift(&alpha)?;
    if !is_lift(&lift, &alpha) {
        return Ok(Some(Report::fail("is_lift", format!("not a lift at {at}"))));
    }
    let u = a[ParamSymbol::U.index()].clone().unwrap();
    let images = psi_images(&lift, &u)?;
    let reports = image_reports(spec, &images, |c| eval(&inst.expr(c)?, &a))?;
    Ok(reports.into_iter().find(|r| !r.passed()).map(|mut r| {
        r.computed = Some(format!("{} at {at}", r.computed.unwrap_or_default()));
        r
    }))
}

/// Witness that a numeric case instance produces, for reuse by drivers
/// that compose further.
pub fn numeric_instance(
    id: &str,
    seed: u64,
) -> Result<(
    AffineMap<Rational>,
    Endomorphism<Rational>,
    Rational,
    CWitness,
)> {
    let specs = lookup(id)?;
    let spec = &specs[0];
    let inst = Instance::new(spec)?;
    let mut rng = case_rng(&spec.id, seed);
    let a = inst.sample(&mut rng)?;
    let alpha = inst.alpha.try_map_coeffs(|c| eval(c, &a))?;
    let lift = inst.lift(&alpha)?;
    let u = a[ParamSymbol::U.index()].clone().unwrap();
    let images = psi_images(&lift, &u)?;
    let w = witness_from_images(&images[0], &images[1], &images[2])
        .ok_or_else(|| Error::CaseConstraintViolated(format!("{id}: images do not classify")))?;
    Ok((alpha, lift, u, w))
}
