//! Text form of scalars: a little expression grammar over `q`, integers,
//! `+ - * / ^` and parentheses. Canonical renderings from
//! [`Scalar`](super::Scalar)'s `Display` parse back bit-exactly.

use super::{QFieldError, Scalar};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub(crate) fn lex_scalar(s: &str) -> Result<Vec<(usize, Tok)>, QFieldError> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
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
            'q' => {
                toks.push((i, Tok::Q));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            _ => {
                return Err(QFieldError::Parse {
                    offset: i,
                    message: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> QFieldError {
        QFieldError::Parse {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Scalar, QFieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, QFieldError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.try_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, QFieldError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let f = self.factor()?;
            return Ok(-&f);
        }
        let mut base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let mut sign = 1i64;
            if let Some(Tok::Minus) = self.peek() {
                self.bump();
                sign = -1;
            }
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: i64 = (&n).try_into().map_err(|_| self.err("exponent too large"))?;
                    let e32: i32 = (sign * e)
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    base = base.pow(e32)?;
                }
                _ => return Err(self.err("expected integer exponent after '^'")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, QFieldError> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Scalar::from_polys(
                super::poly::ZPoly::from_bigint(n),
                super::poly::ZPoly::one(),
            )
            .expect("unit denominator")),
            Some(Tok::Q) => Ok(Scalar::q()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("expected integer, 'q', or '('")),
        }
    }
}

/// Parse a scalar from its text form.
pub fn parse_scalar(s: &str) -> Result<Scalar, QFieldError> {
    let toks = lex_scalar(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: s.len(),
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_roundtrip() {
        for text in [
            "q",
            "0",
            "-1",
            "(q^2 + 1)/(q)",
            "2*q^3 - q + 5",
            "(-q - 1)/(q^2 - q)",
        ] {
            let v = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v, "{}", text);
        }
    }

    #[test]
    fn reduction_happens() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let v = parse_scalar("(q^2 - 1)/(q - 1)").unwrap();
        assert_eq!(v, parse_scalar("q + 1").unwrap());
        assert_eq!(v.to_string(), "q + 1");
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_scalar("q + #") {
            Err(QFieldError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
    }
}
