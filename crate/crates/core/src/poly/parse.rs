//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' natural)?
//! atom   := integer | integer '/' integer | ident | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication: `2x` is a syntax error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{PolyError, PolyRing, Polynomial};

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

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(PolyError::Syntax { position: start, message: format!("unexpected character `{other}`") })
            }
        };
        toks.push((tok, start));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Int(n)) => match n.to_u32() {
                    Some(e) => e,
                    None => return self.err("exponent too large"),
                },
                _ => return self.err("expected a nonnegative integer exponent"),
            };
            self.pos += 1;
            if let Some(Tok::Caret) = self.peek() {
                return self.err("chained exponents must be parenthesized");
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let position = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let value = if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            BigRational::new(n, d)
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected denominator after `/`"),
                    }
                } else {
                    BigRational::from_integer(n)
                };
                self.reject_juxtaposition()?;
                Ok(self.ring.constant(value))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let v = match self.ring.var_named(&name) {
                    Some(v) => v,
                    None => return Err(PolyError::UnknownVariable { name, position }),
                };
                self.reject_juxtaposition()?;
                Ok(v)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => self.pos += 1,
                    _ => return self.err("expected `)`"),
                }
                self.reject_juxtaposition()?;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }

    fn reject_juxtaposition(&self) -> Result<(), PolyError> {
        match self.peek() {
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                self.err("juxtaposition is not multiplication; use `*`")
            }
            _ => Ok(()),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &PolyRing) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Syntax { position: 0, message: "empty input".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), ring };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}
