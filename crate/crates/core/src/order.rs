//! Monomial orders: lex, grevlex, weight orders with a tiebreak, and the
//! block elimination orders used internally for intersections.
//!
//! Variables are ordered by position: `x_1 > x_2 > ... > x_n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiebreak {
    Lex,
    Grevlex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Compare w-degrees first; equal w-degrees fall back to `tiebreak`.
    Weight { weights: Vec<u32>, tiebreak: Tiebreak },
    /// Product order for the last `trailing` variables: total degree in the
    /// trailing block first, then `base` on the leading variables, then lex on
    /// the trailing block. Any monomial involving a trailing variable beats
    /// every monomial free of them.
    Elimination { trailing: usize, base: Box<MonomialOrder> },
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn weighted(a: &[u32], w: &[u32]) -> u64 {
    a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum()
}

impl Tiebreak {
    fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            Tiebreak::Lex => cmp_lex(a, b),
            Tiebreak::Grevlex => cmp_grevlex(a, b),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Tiebreak::Lex => "lex",
            Tiebreak::Grevlex => "grevlex",
        }
    }
}

impl MonomialOrder {
    pub fn weight(weights: Vec<u32>, tiebreak: Tiebreak) -> Self {
        MonomialOrder::Weight { weights, tiebreak }
    }

    /// Eliminate the last `trailing` variables, ordering the rest by `base`.
    pub fn eliminate(trailing: usize, base: MonomialOrder) -> Self {
        MonomialOrder::Elimination {
            trailing,
            base: Box::new(base),
        }
    }

    /// The order used to break ties when refining a weight by this order.
    pub fn tiebreak(&self) -> Tiebreak {
        match self {
            MonomialOrder::Lex => Tiebreak::Lex,
            MonomialOrder::Grevlex => Tiebreak::Grevlex,
            MonomialOrder::Weight { tiebreak, .. } => *tiebreak,
            MonomialOrder::Elimination { base, .. } => base.tiebreak(),
        }
    }

    /// Number of variables the order expects, when it pins one down.
    pub fn arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => None,
            MonomialOrder::Weight { weights, .. } => Some(weights.len()),
            MonomialOrder::Elimination { trailing, base } => base.arity().map(|n| n + trailing),
        }
    }

    pub fn check_arity(&self, n: usize) -> Result<()> {
        match self.arity() {
            Some(k) if k != n => Err(Error::DimensionMismatch {
                expected: n,
                found: k,
            }),
            _ => {
                if let MonomialOrder::Weight { weights, .. } = self {
                    if weights.contains(&0) {
                        return Err(Error::InvalidWeight { expected: n });
                    }
                }
                if let MonomialOrder::Elimination { trailing, base } = self {
                    if *trailing == 0 || *trailing >= n {
                        return Err(Error::InvalidArgument("bad elimination block".into()));
                    }
                    base.check_arity(n - trailing)?;
                }
                Ok(())
            }
        }
    }

    #[inline]
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Weight { weights, tiebreak } => weighted(a, weights)
                .cmp(&weighted(b, weights))
                .then_with(|| tiebreak.cmp(a, b)),
            MonomialOrder::Elimination { trailing, base } => {
                let split = a.len() - trailing;
                let ta: u64 = a[split..].iter().map(|&e| e as u64).sum();
                let tb: u64 = b[split..].iter().map(|&e| e as u64).sum();
                ta.cmp(&tb)
                    .then_with(|| base.cmp_exps(&a[..split], &b[..split]))
                    .then_with(|| cmp_lex(&a[split..], &b[split..]))
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    /// Checked comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        self.check_arity(a.nvars())?;
        Ok(self.cmp(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Weight { weights, tiebreak } => {
                let ws: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "weight({}; tie={})", ws.join(","), tiebreak.name())
            }
            MonomialOrder::Elimination { trailing, base } => write!(f, "elim({}; {})", trailing, base),
        }
    }
}

fn order_error(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: msg.into(),
    }
}

fn parse_tiebreak(s: &str) -> Result<Tiebreak> {
    match s.trim() {
        "lex" => Ok(Tiebreak::Lex),
        "grevlex" => Ok(Tiebreak::Grevlex),
        other => Err(order_error(format!("unknown tiebreak `{other}`"))),
    }
}

pub(crate) fn parse_weights(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|w| {
            let w = w.trim();
            match w.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(order_error(format!("weight `{w}` is not a positive integer"))),
            }
        })
        .collect()
}

impl FromStr for MonomialOrder {
    type Err = Error;

    /// Accepts `lex`, `grevlex`, `weight(w1,...,wn)` (grevlex tiebreak),
    /// `weight(w1,...,wn; tie=lex|grevlex)` and `elim(k; <order>)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "lex" => return Ok(MonomialOrder::Lex),
            "grevlex" => return Ok(MonomialOrder::Grevlex),
            _ => {}
        }
        let (head, body) = s
            .split_once('(')
            .ok_or_else(|| order_error(format!("unknown order `{s}`")))?;
        let body = body
            .strip_suffix(')')
            .ok_or_else(|| order_error("missing `)` in order"))?;
        match head.trim() {
            "weight" => {
                let (ws, tie) = match body.split_once(';') {
                    Some((ws, rest)) => {
                        let rest = rest.trim();
                        let tie = rest
                            .strip_prefix("tie")
                            .map(str::trim_start)
                            .and_then(|r| r.strip_prefix('='))
                            .ok_or_else(|| order_error("expected `tie=` in weight order"))?;
                        (ws, parse_tiebreak(tie)?)
                    }
                    None => (body, Tiebreak::Grevlex),
                };
                Ok(MonomialOrder::weight(parse_weights(ws)?, tie))
            }
            "elim" => {
                let (k, base) = body
                    .split_once(';')
                    .ok_or_else(|| order_error("expected `elim(k; order)`"))?;
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| order_error("elimination block size must be an integer"))?;
                Ok(MonomialOrder::eliminate(k, base.parse()?))
            }
            other => Err(order_error(format!("unknown order `{other}`"))),
        }
    }
}
