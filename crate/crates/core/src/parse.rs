//! Polynomial text syntax.
//!
//! ```text
//! expr   = [sign] term { sign term }
//! term   = factor { "*" factor }
//! factor = atom [ "^" integer ]
//! atom   = integer | identifier | "(" expr ")" | "-" atom
//! ```
//!
//! Integer literals of any length are reduced modulo p. Printing goes
//! through [`Polynomial::display_with`], which emits a string this parser
//! reads back to the same polynomial.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A byte offset translated into line/column for error messages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Origin {
    pub line: usize,
    pub column: usize,
}

impl Default for Origin {
    fn default() -> Self {
        Origin { line: 1, column: 1 }
    }
}

pub(crate) fn position(src: &str, offset: usize, origin: Origin) -> Origin {
    let before = &src[..offset.min(src.len())];
    match before.rfind('\n') {
        Some(nl) => Origin {
            line: origin.line + before.matches('\n').count(),
            column: before[nl + 1..].chars().count() + 1,
        },
        None => Origin {
            line: origin.line,
            column: origin.column + before.chars().count(),
        },
    }
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a str,
    pos: usize,
    origin: Origin,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let o = position(self.src, at, self.origin);
        Error::Parse {
            line: o.line,
            column: o.column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.factor()?;
            acc = acc.checked_mul(&f).map_err(|e| self.error(self.pos, e.to_string()))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let at = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(self.error(at, "expected exponent after `^`"));
            }
            let k: u32 = digits
                .parse()
                .map_err(|_| self.error(at, "exponent too large"))?;
            return base.checked_pow(k).map_err(|e| self.error(at, e.to_string()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(self.pos, "expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some('-') => {
                self.bump();
                Ok(-&self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let field = self.ring.field();
                let p = field.characteristic() as u64;
                let v = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, field.element(v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::monomial(
                        self.ring,
                        Monomial::var(self.ring.nvars(), i),
                        Fp::ONE,
                    )),
                    None => Err(self.error(at, format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(self.error(at, format!("unexpected character `{c}`"))),
            None => Err(self.error(at, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial; error positions are reported relative to `origin`.
pub fn parse_polynomial_at(ring: &Arc<Ring>, src: &str, origin: Origin) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        src,
        pos: 0,
        origin,
    };
    let f = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.error(p.pos, format!("unexpected character `{c}`")));
    }
    Ok(f)
}

pub fn parse_polynomial(ring: &Arc<Ring>, src: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, src, Origin::default())
}

/// Parses a monomial written in polynomial syntax (coefficient must be 1).
pub fn parse_monomial(ring: &Arc<Ring>, src: &str) -> Result<Monomial> {
    let f = parse_polynomial(ring, src)?;
    match f.terms() {
        [t] if t.coeff.is_one() => Ok(t.monomial.clone()),
        _ => Err(Error::InvalidArgument(format!("`{src}` is not a monomial"))),
    }
}
