//! Infix expressions over algebra generators: `+ - * / ^`, integer and Q(q)
//! scalar literals, parentheses. Frozen grammar (EBNF):
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = factor { ("*" | "/") factor } ;
//! factor   = [ "-" ] atom [ "^" [ "-" ] integer ] ;
//! atom     = integer | "q" | generator | "(" expr ")" ;
//! ```
//!
//! `/` requires a scalar (generator-free) divisor; `^` with a negative
//! exponent requires a scalar base. Parse errors cite byte offsets.

use super::{NCPoly, Presentation};
use crate::qfield::Scalar;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExprError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("at byte {offset}: division by a non-scalar expression")]
    NonScalarDivisor { offset: usize },
    #[error("at byte {offset}: division by zero")]
    DivisionByZero { offset: usize },
    #[error("at byte {offset}: negative power of a non-scalar expression")]
    NegativePower { offset: usize },
    #[error("expression degree {needed} exceeds cap {cap}")]
    DegreeOverflow { cap: usize, needed: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(s[start..i].parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric()
                        || bytes[i] == b'_'
                        || bytes[i] == b'~')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(s[start..i].to_string())));
            }
            _ => {
                return Err(ExprError::Parse {
                    offset: i,
                    message: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(toks)
}

struct Ctx<'a> {
    pres: &'a Presentation,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a> Ctx<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> ExprError {
        ExprError::Parse {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul_raw(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let off = self.offset();
                    self.bump();
                    let rhs = self.factor()?;
                    let c = as_scalar(&rhs).ok_or(ExprError::NonScalarDivisor { offset: off })?;
                    let inv = c
                        .inv()
                        .map_err(|_| ExprError::DivisionByZero { offset: off })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly, ExprError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let f = self.factor()?;
            return Ok(f.neg());
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let off = self.offset();
            self.bump();
            let mut sign = 1i64;
            if let Some(Tok::Minus) = self.peek() {
                self.bump();
                sign = -1;
            }
            let e: i64 = match self.bump() {
                Some((_, Tok::Int(n))) => {
                    (&n).try_into().map_err(|_| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected integer exponent after '^'")),
            };
            let e = sign * e;
            if e < 0 {
                let c = as_scalar(&base).ok_or(ExprError::NegativePower { offset: off })?;
                let inv = c
                    .pow(e as i32)
                    .map_err(|_| ExprError::DivisionByZero { offset: off })?;
                return Ok(NCPoly::scalar(inv));
            }
            let mut acc = NCPoly::one();
            for _ in 0..e {
                acc = acc.mul_raw(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly, ExprError> {
        let off = self.offset();
        match self.bump() {
            Some((_, Tok::Int(n))) => Ok(NCPoly::scalar(Scalar::from_polys(
                crate::qfield::ZPoly::from_bigint(n),
                crate::qfield::ZPoly::one(),
            )
            .expect("unit denominator"))),
            Some((_, Tok::Ident(name))) => {
                if name == "q" {
                    return Ok(NCPoly::scalar(Scalar::q()));
                }
                match self.pres.generator_index(&name) {
                    Some(i) => Ok(NCPoly::gen(i)),
                    None => Err(ExprError::Parse {
                        offset: off,
                        message: format!("unknown generator '{}'", name),
                    }),
                }
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("expected integer, scalar, generator, or '('")),
        }
    }
}

fn as_scalar(p: &NCPoly) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    if p.num_terms() == 1 {
        if let Some((w, c)) = p.leading() {
            if w.is_empty() {
                return Some(c.clone());
            }
        }
    }
    None
}

/// Parse an expression in the generators of `pres` into a raw (unreduced)
/// polynomial.
pub fn parse_expr(pres: &Presentation, input: &str) -> Result<NCPoly, ExprError> {
    let toks = lex(input)?;
    let mut ctx = Ctx {
        pres,
        toks,
        pos: 0,
        end: input.len(),
    };
    let p = ctx.expr()?;
    if ctx.pos != ctx.toks.len() {
        return Err(ctx.err("trailing input"));
    }
    Ok(p)
}

/// A caret diagnostic line for CLI error display.
pub fn caret_line(input: &str, offset: usize) -> String {
    format!("{}\n{}^", input, " ".repeat(offset.min(input.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Presentation;

    fn toy() -> Presentation {
        // free algebra on x, y
        Presentation::new(
            vec!["x".into(), "y".into()],
            crate::ncalg::RewriteSystem::new(2, vec![]).unwrap(),
        )
    }

    #[test]
    fn words_and_scalars() {
        let p = toy();
        let e = parse_expr(&p, "q^-1*x*y - 2").unwrap();
        assert_eq!(e.num_terms(), 2);
        assert_eq!(e.coeff(&crate::ncalg::Word(vec![0, 1])), Scalar::q_pow(-1));
    }

    #[test]
    fn division_by_generator_is_rejected() {
        let p = toy();
        assert!(matches!(
            parse_expr(&p, "x/y"),
            Err(ExprError::NonScalarDivisor { .. })
        ));
    }

    #[test]
    fn unknown_generator_cites_offset() {
        let p = toy();
        match parse_expr(&p, "x*zz") {
            Err(ExprError::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected error, got {:?}", other),
        }
    }

    #[test]
    fn power_expansion() {
        let p = toy();
        let e = parse_expr(&p, "(x + y)^2").unwrap();
        assert_eq!(e.num_terms(), 4);
    }
}
