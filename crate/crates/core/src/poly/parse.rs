//! Reader for the canonical text form.
//!
//! Accepts `+ - * / ^ ( )`, integer literals, generator names and parameter
//! names. Division is allowed only by constants that are units of the
//! coefficient field (a nonzero rational or a monomial in invertible
//! parameters).

use crate::coeffs::{Coeff, ParamFraction, ParamSymbol, Rational, SymbolSet};
use crate::error::{Error, Result};

use super::monomial::{Ring, GEN_NAMES};
use super::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let q: Rational = src[start..i].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "bad integer".into(),
            })?;
            out.push((start, Tok::Num(q)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: Ring,
    invertible: SymbolSet,
}

type P = Polynomial<ParamFraction>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.at();
                let d = self.unary()?;
                let inv = unit_inverse(&d).ok_or_else(|| Error::Parse {
                    pos: at,
                    msg: format!("division by non-unit `{d}`"),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<P> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<P> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(q)) if q.is_integer() => {
                    self.pos += 1;
                    let e = q
                        .to_f64()
                        .filter(|e| *e <= u32::MAX as f64)
                        .ok_or_else(|| Error::Parse {
                            pos: self.at(),
                            msg: "exponent too large".into(),
                        })?;
                    Ok(base.pow(e as u32))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<P> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(P::constant(self.ring, ParamFraction::constant(q)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = GEN_NAMES.iter().position(|g| *g == name) {
                    if i >= self.ring.ngens() {
                        return self.err(format!("generator `{name}` outside {:?}", self.ring));
                    }
                    return Ok(P::var(self.ring, i));
                }
                if let Some(s) = ParamSymbol::from_name(&name) {
                    let c = ParamFraction::symbol(s, self.invertible.contains(s));
                    return Ok(P::constant(self.ring, c));
                }
                self.pos -= 1;
                self.err(format!("unknown name `{name}`"))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            _ => self.err("expected a term"),
        }
    }
}

fn unit_inverse(d: &P) -> Option<ParamFraction> {
    if d.len() != 1 {
        return None;
    }
    let (m, c) = d.iter().next()?;
    if !m.is_one() {
        return None;
    }
    c.try_inverse()
}

/// Parses over parameter fractions; `invertible` decides which parameter
/// symbols may appear in denominators.
pub fn parse_param(src: &str, ring: Ring, invertible: SymbolSet) -> Result<P> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        ring,
        invertible,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses into any coefficient field. Parameter names are rejected by fields
/// that cannot hold them.
pub fn parse<C: Coeff>(src: &str, ring: Ring) -> Result<Polynomial<C>> {
    let p = parse_param(src, ring, SymbolSet::all())?;
    p.try_map_coeffs(|c| {
        C::from_param_fraction(c).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("coefficient `{c}` not representable in this field"),
        })
    })
}

impl<C: Coeff> std::str::FromStr for Polynomial<C> {
    type Err = Error;

    /// Six-variable parse; use [`parse`] for the three-variable ring.
    fn from_str(s: &str) -> Result<Self> {
        parse(s, Ring::Six)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_rational() {
        let s = "x1*x3 - x2^2";
        let p: Polynomial<Rational> = parse(s, Ring::Three).unwrap();
        assert_eq!(p.to_string(), s);
    }

    #[test]
    fn round_trip_param() {
        for s in [
            "u^2*tf^2*tg + x1 - 2*u*tr*tf",
            "(c1*c3 - c2^2)*x1 + 1/4*tf",
            "-(1/4 / c1)*x2",
        ] {
            let p = parse_param(s, Ring::Six, SymbolSet::all()).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn division_rules() {
        assert!(parse_param("x1 / c1", Ring::Three, SymbolSet::all()).is_ok());
        assert!(parse_param("x1 / c1", Ring::Three, SymbolSet::EMPTY).is_err());
        assert!(parse_param("1 / x1", Ring::Three, SymbolSet::all()).is_err());
        assert!(parse_param("1 / (c1 + P)", Ring::Three, SymbolSet::all()).is_err());
        assert!(parse::<Rational>("u*x1", Ring::Three).is_err());
    }

    #[test]
    fn t_generators_need_six_vars() {
        assert!(parse::<Rational>("tf", Ring::Three).is_err());
        assert!(parse::<Rational>("tf", Ring::Six).is_ok());
    }
}
