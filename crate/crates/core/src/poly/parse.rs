//! Textual polynomial syntax: `3*x0^2*x1 - 1/2*x2`.
//!
//! Emission is canonical (storage order, explicit `+`/`-`, `1*` omitted), and
//! parsing a canonical string reproduces it byte for byte.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Coeff, Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => { out.push(Tok::Plus); i += 1 }
            '-' => { out.push(Tok::Minus); i += 1 }
            '*' => { out.push(Tok::Star); i += 1 }
            '/' => { out.push(Tok::Slash); i += 1 }
            '^' => { out.push(Tok::Caret); i += 1 }
            '(' => { out.push(Tok::LParen); i += 1 }
            ')' => { out.push(Tok::RParen); i += 1 }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(s[start..i].parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Tok::Ident(s[start..i].to_string()));
            }
            other => return Err(Error::parse(0, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Arc<Ring>,
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::parse(0, "exponent out of range"))?;
                    if e >= 1 << 16 {
                        return Err(Error::parse(0, "exponent out of range"));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::parse(0, "expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Tok::Num(n)) => {
                let mut q = BigRational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            q /= BigRational::from_integer(d);
                        }
                        _ => return Err(Error::parse(0, "expected nonzero denominator")),
                    }
                }
                let c = self
                    .ring
                    .field()
                    .from_rational(&q)
                    .map_err(|e| Error::parse(0, e.to_string()))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                let i = self
                    .ring
                    .index_of(&name)
                    .ok_or_else(|| Error::parse(0, format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::parse(0, "expected `)`")),
                }
            }
            Some(t) => Err(Error::parse(0, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(0, "unexpected end of input")),
        }
    }
}

pub fn parse_poly(ring: &Arc<Ring>, s: &str) -> Result<Polynomial> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(0, format!("trailing input in `{s}`")));
    }
    Ok(out)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &super::Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.names()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring().clone();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let (negative, mag) = match c {
                Coeff::Q(q) => (q.is_negative(), q.abs()),
                Coeff::P(v) => (false, BigRational::from_integer(BigInt::from(*v))),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", super::field::format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", super::field::format_rational(&mag))?;
                }
                write_monomial(f, &ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    #[test]
    fn canonical_emission() {
        let r = Ring::indexed(Field::Rational, "x", 3).unwrap();
        let s = "3*x0^2*x1 - 1/2*x2";
        let p = parse_poly(&r, s).unwrap();
        assert_eq!(p.to_string(), s);
        let q = parse_poly(&r, "-(x0 + x1)^2 + 4/8").unwrap();
        assert_eq!(q.to_string(), "-x0^2 - 2*x0*x1 - x1^2 + 1/2");
        assert_eq!(parse_poly(&r, &q.to_string()).unwrap(), q);
    }

    #[test]
    fn modular_emission() {
        let r = Ring::indexed(Field::Prime(7), "x", 2).unwrap();
        let p = parse_poly(&r, "x0 - 1/2").unwrap();
        assert_eq!(p.to_string(), "x0 + 3");
    }

    #[test]
    fn errors() {
        let r = Ring::indexed(Field::Rational, "x", 2).unwrap();
        assert!(parse_poly(&r, "x0 +").is_err());
        assert!(parse_poly(&r, "y").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
        assert!(parse_poly(&r, "x0 $ x1").is_err());
        assert!(parse_poly(&r, "").is_err());
    }
}
