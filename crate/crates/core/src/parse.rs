//! Text formats for polynomials, shared by the library and the CLI.
//!
//! Accepted inputs:
//!   * an ascending coefficient list: `[c0, c1, ..., cn]`
//!   * an expression over `x` with `+ - * ^`, integer literals and
//!     parentheses, e.g. `x^5 - 5*x + 12`; juxtaposed parenthesized groups
//!     multiply, so `(x^3-2)(x^2+x+1)` is a product.
//!
//! Parsing is exact integer arithmetic throughout.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::IntPoly;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(num.parse().unwrap()));
            }
            'x' | 'X' => {
                chars.next();
                out.push(Tok::X);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' | '\u{2212}' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' | '\u{00b7}' => {
                chars.next();
                out.push(Tok::Star);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LPar);
            }
            ')' => {
                chars.next();
                out.push(Tok::RPar);
            }
            _ => return Err(Error::parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                // implicit multiplication: `2x`, `(..)(..)`, `3(x+1)`
                Some(Tok::X) | Some(Tok::LPar) | Some(Tok::Int(_)) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = match self.next() {
            Some(Tok::Int(n)) => Poly::constant(n),
            Some(Tok::X) => Poly::x(),
            Some(Tok::LPar) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RPar) => inner,
                    _ => return Err(Error::parse("missing ')'")),
                }
            }
            other => return Err(Error::parse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: usize = e
                        .try_into()
                        .map_err(|_| Error::parse("exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::parse("expected integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }
}

fn parse_coeff_list(s: &str) -> Result<IntPoly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::parse("coefficient list must be bracketed"))?;
    let mut coeffs = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: BigInt = part
            .parse()
            .map_err(|_| Error::parse(format!("bad integer literal '{part}'")))?;
        coeffs.push(v);
    }
    Ok(Poly::new(coeffs))
}

/// Parse one polynomial from either accepted format.
pub fn parse_poly(s: &str) -> Result<IntPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    if s.starts_with('[') {
        return parse_coeff_list(s);
    }
    let toks = tokenize(s)?;
    let mut parser = Parser { toks, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(Error::parse("trailing input after polynomial"));
    }
    Ok(poly)
}

/// Parse an instance input.  A sequence of juxtaposed top-level
/// parenthesized groups is returned as the list of stated factors;
/// anything else is a single expanded polynomial.
pub enum PolyInput {
    Factored(Vec<IntPoly>),
    Expanded(IntPoly),
}

pub fn parse_poly_input(s: &str) -> Result<PolyInput> {
    let s = s.trim();
    if let Some(groups) = split_top_level_groups(s) {
        if groups.len() >= 2 {
            let factors = groups
                .iter()
                .map(|g| parse_poly(g))
                .collect::<Result<Vec<_>>>()?;
            return Ok(PolyInput::Factored(factors));
        }
        if groups.len() == 1 {
            return Ok(PolyInput::Factored(vec![parse_poly(&groups[0])?]));
        }
    }
    Ok(PolyInput::Expanded(parse_poly(s)?))
}

/// If `s` is exactly `(g1)(g2)...(gk)` (optionally `*`-separated), return
/// the group bodies.
fn split_top_level_groups(s: &str) -> Option<Vec<String>> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                if depth == 0 && !current.trim().is_empty() {
                    return None;
                }
                if depth > 0 {
                    current.push(c);
                }
                depth += 1;
            }
            ')' => {
                if depth == 0 {
                    return None;
                }
                depth -= 1;
                if depth == 0 {
                    groups.push(current.clone());
                    current.clear();
                } else {
                    current.push(c);
                }
            }
            '*' | ' ' if depth == 0 => {}
            _ => {
                if depth == 0 {
                    return None;
                }
                current.push(c);
            }
        }
    }
    if depth != 0 || groups.is_empty() {
        return None;
    }
    Some(groups)
}
