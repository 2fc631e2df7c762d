//! Text form of cyclotomic numbers and Laurent polynomials.
//!
//! A polynomial is written as a sum of terms `c*zK^e*x^a*y^b` where `c` is a
//! rational, `zK^e` is the power `ζ_K^e` of the power basis and each variable
//! carries an explicit exponent. Terms appear in lexicographic order of their
//! exponent vectors, then by the power of `ζ`.

use num_traits::{One, Signed, Zero};

use super::{Cyclotomic, LaurentPoly, Rational, Vars};
use crate::{Error, Result};

struct Term {
    coeff: Rational,
    factors: Vec<String>,
}

fn render_terms(terms: Vec<Term>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        let neg = t.coeff.is_negative();
        let abs = t.coeff.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if !abs.is_one() || t.factors.is_empty() {
            parts.push(abs.to_string());
        }
        parts.extend(t.factors);
        out.push_str(&parts.join("*"));
    }
    out
}

fn zeta_factor(k: u32, e: usize) -> Option<String> {
    (e > 0).then(|| format!("z{k}^{e}"))
}

pub(super) fn render_cyclotomic(c: &Cyclotomic) -> String {
    let k = c.order();
    let terms = c
        .power_terms()
        .map(|(e, r)| Term {
            coeff: r.clone(),
            factors: zeta_factor(k, e).into_iter().collect(),
        })
        .collect();
    render_terms(terms)
}

pub(super) fn render_poly(p: &LaurentPoly) -> String {
    let k = p.order();
    let names = p.vars().names();
    let mut terms = Vec::new();
    for (exps, c) in p.terms() {
        let monomial: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e != 0)
            .map(|(e, n)| format!("{n}^{e}"))
            .collect();
        for (ze, r) in c.power_terms() {
            let mut factors: Vec<String> = zeta_factor(k, ze).into_iter().collect();
            factors.extend(monomial.iter().cloned());
            terms.push(Term {
                coeff: r.clone(),
                factors,
            });
        }
    }
    render_terms(terms)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
    k: u32,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars, self.k);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Num(n)) => {
                let v: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok(if neg { -v } else { v })
            }
            other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.next() {
            Some(Tok::Num(n)) => {
                let mut r = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if !d.is_zero() => r /= Rational::from_integer(d),
                        other => {
                            return Err(Error::Parse(format!("bad denominator {other:?}")))
                        }
                    }
                }
                Ok(LaurentPoly::constant(self.vars, Cyclotomic::from_rational(self.k, r)))
            }
            Some(Tok::Ident(name)) => {
                let e = self.exponent()?;
                if let Some(i) = self.vars.index_of(&name) {
                    let mut exps = vec![0; self.vars.len()];
                    exps[i] = i32::try_from(e).map_err(|_| Error::Parse("exponent".into()))?;
                    return Ok(LaurentPoly::monomial(self.vars, exps, Cyclotomic::one(self.k)));
                }
                let m = zeta_order(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {name}")))?;
                if m == 0 || !self.k.is_multiple_of(m) {
                    return Err(Error::Parse(format!("{name} is not a root of unity in Q(ζ_{})", self.k)));
                }
                let step = (self.k / m) as i64;
                Ok(LaurentPoly::constant(self.vars, Cyclotomic::root(self.k, e * step)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("missing )".into()));
                }
                let e = self.exponent()?;
                if e < 0 {
                    return Err(Error::Parse("negative power of a sum".into()));
                }
                Ok(inner.pow(e as u32))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn zeta_order(name: &str) -> Option<u32> {
    let rest = name.strip_prefix('z')?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

pub(super) fn parse_poly(vars: &Vars, k: u32, text: &str) -> Result<LaurentPoly> {
    for n in vars.names() {
        if zeta_order(n).is_some() {
            return Err(Error::Invalid(format!("variable name {n} clashes with root notation")));
        }
    }
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, vars, k };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(out)
}

/// Variable names used in `text`, in order of first appearance, skipping
/// root-of-unity symbols `zK`.
pub fn variable_names(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Tok::Ident(name) = t {
            if zeta_order(&name).is_none() && !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok(out)
}

impl Cyclotomic {
    pub fn parse(k: u32, text: &str) -> Result<Cyclotomic> {
        Ok(parse_poly(&Vars::none(), k, text)?.constant_term())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_examples() {
        let v = Vars::new(["q", "t"]);
        let p = LaurentPoly::parse(&v, 3, "3*q^-2*t^1 + z3^1 - 1/2*t^3").unwrap();
        assert_eq!(p.to_string(), "3*q^-2*t^1 + z3^1 - 1/2*t^3");
        let c = Cyclotomic::parse(3, "z3^2").unwrap();
        assert_eq!(c.to_string(), "-1 - z3^1");
        assert_eq!(LaurentPoly::zero(&v, 1).to_string(), "0");
    }

    #[test]
    fn parse_products_and_powers() {
        let v = Vars::new(["q"]);
        let p = LaurentPoly::parse(&v, 1, "(1 + q)^2").unwrap();
        assert_eq!(p.to_string(), "1 + 2*q^1 + q^2");
        assert!(LaurentPoly::parse(&v, 1, "x").is_err());
        assert!(LaurentPoly::parse(&v, 1, "q +").is_err());
        assert!(LaurentPoly::parse(&v, 4, "z3").is_err());
        assert_eq!(
            LaurentPoly::parse(&v, 4, "z2").unwrap(),
            LaurentPoly::from_int(&v, 4, -1)
        );
    }
}
