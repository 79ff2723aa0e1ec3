//! Sparse multivariate polynomials over F_p.
//!
//! Terms are kept sorted by the canonical exponent-vector order of
//! [`Monomial`], so equality does not depend on any monomial order. Views
//! sorted by a requested [`MonomialOrder`] are produced on demand.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: Fp,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Fp) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Fp::ONE)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Fp::ONE)
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Fp) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { monomial: m, coeff: c }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Fp)>) -> Result<Self> {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Fp> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            let e = acc.entry(m).or_insert(Fp::ZERO);
            *e = field.add(*e, c);
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, Fp>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { monomial, coeff })
            .collect();
        terms.sort_unstable_by(|a, b| a.monomial.cmp(&b.monomial));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already in canonical order with nonzero
    /// coefficients and no repeats.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].monomial < w[1].monomial));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.monomial)
    }

    pub fn coefficient(&self, m: &Monomial) -> Fp {
        self.terms
            .binary_search_by(|t| t.monomial.cmp(m))
            .map(|i| self.terms[i].coeff)
            .unwrap_or(Fp::ZERO)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub(crate) fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.same_ring(other).expect("ring mismatch");
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: Fp| if negate_other { field.neg(c) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.monomial.cmp(&b.monomial) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(Term {
                        monomial: b.monomial.clone(),
                        coeff: sign(b.coeff),
                    });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(a.coeff, sign(b.coeff));
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: a.monomial.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| Term {
            monomial: t.monomial.clone(),
            coeff: sign(t.coeff),
        }));
        Polynomial::from_sorted_unchecked(&self.ring, out)
    }

    pub fn scale(&self, c: Fp) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                monomial: t.monomial.clone(),
                coeff: field.mul(t.coeff, c),
            })
            .collect();
        Polynomial::from_sorted_unchecked(&self.ring, terms)
    }

    pub fn checked_mul_monomial(&self, m: &Monomial, c: Fp) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                monomial: t.monomial.checked_mul(m)?,
                coeff: field.mul(t.coeff, c),
            });
        }
        // The canonical order is lex, which is multiplicative.
        Ok(Polynomial::from_sorted_unchecked(&self.ring, terms))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Fp> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.monomial.checked_mul(&b.monomial)?;
                let e = acc.entry(m).or_insert(Fp::ZERO);
                *e = field.add(*e, field.mul(a.coeff, b.coeff));
            }
        }
        Ok(Polynomial::from_map(&self.ring, acc))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`, computed termwise: Frobenius is additive in
    /// characteristic p and fixes F_p.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        let q = p.checked_pow(e).ok_or(Error::ExponentOverflow)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                monomial: t.monomial.checked_pow(q)?,
                coeff: t.coeff,
            });
        }
        Ok(Polynomial::from_sorted_unchecked(&self.ring, terms))
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<&Term> {
        let mut v: Vec<&Term> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        v
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.monomial, &b.monomial))
            .map(|t| &t.monomial)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<Term> {
        order.check_arity(self.ring.nvars())?;
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.monomial, &b.monomial))
            .cloned()
            .ok_or(Error::ZeroPolynomial("leading term"))
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<Fp> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.monomial, &b.monomial))
            .map(|t| t.coeff)
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            Some(c) if !c.is_one() => self.scale(self.ring.field().inv(c)),
            _ => self.clone(),
        }
    }

    fn check_weight(&self, w: &[u32]) -> Result<()> {
        if w.len() != self.ring.nvars() || w.contains(&0) {
            return Err(Error::InvalidWeight {
                expected: self.ring.nvars(),
            });
        }
        Ok(())
    }

    /// Maximal w-degree over the support.
    pub fn weighted_degree(&self, w: &[u32]) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.weighted_degree(w)).max()
    }

    /// Sum of the terms of maximal w-degree.
    pub fn initial_w(&self, w: &[u32]) -> Result<Polynomial> {
        self.check_weight(w)?;
        let top = self
            .weighted_degree(w)
            .ok_or(Error::ZeroPolynomial("initial form"))?;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.monomial.weighted_degree(w) == top)
            .cloned()
            .collect();
        Ok(Polynomial::from_sorted_unchecked(&self.ring, terms))
    }

    pub fn is_weighted_homogeneous(&self, w: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.monomial.weighted_degree(w));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        self.same_ring(d).ok()?;
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::Grevlex;
        let field = self.ring.field();
        let lt = d.leading_term(&order).ok()?;
        let inv = field.inv(lt.coeff);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Ok(top) = rem.leading_term(&order) {
            let m = top.monomial.div(&lt.monomial)?;
            let c = field.mul(top.coeff, inv);
            rem = &rem - &d.checked_mul_monomial(&m, c).ok()?;
            quotient.push((m, c));
        }
        Polynomial::from_terms(&self.ring, quotient).ok()
    }

    /// Re-embeds into `target`, whose first variables must be this ring's,
    /// padding exponents of new trailing variables with zero.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if target.nvars() < n
            || target.characteristic() != self.ring.characteristic()
            || target.names()[..n] != *self.ring.names()
        {
            return Err(Error::RingMismatch);
        }
        let extra = target.nvars() - n;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut m = t.monomial.clone();
                for _ in 0..extra {
                    m = m.extend_with(0);
                }
                Term {
                    monomial: m,
                    coeff: t.coeff,
                }
            })
            .collect();
        Ok(Polynomial::from_sorted_unchecked(target, terms))
    }

    /// Substitutes `value` for the last variable, landing in `target`
    /// (the ring without that variable).
    pub fn specialize_last(&self, value: Fp, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.nvars() + 1 != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let field = self.ring.field();
        let last = self.ring.nvars() - 1;
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.monomial.exponents()[last];
            let c = if e == 0 {
                t.coeff
            } else {
                field.mul(t.coeff, field.pow(value, e as u64))
            };
            (!c.is_zero()).then(|| (t.monomial.truncate_last(1), c))
        });
        Polynomial::from_terms(target, terms)
    }

    /// Formats with terms sorted descending by `order`.
    pub fn display_with<'a>(&'a self, order: &'a MonomialOrder) -> DisplayPoly<'a> {
        DisplayPoly { poly: self, order }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub struct DisplayPoly<'a> {
    poly: &'a Polynomial,
    order: &'a MonomialOrder,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        if poly.is_zero() {
            return f.write_str("0");
        }
        let field = poly.ring.field();
        for (i, t) in poly.sorted_terms(self.order).into_iter().enumerate() {
            let c = field.signed(t.coeff);
            let (neg, mag) = (c < 0, c.unsigned_abs());
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, poly.ring.names(), &t.monomial)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&MonomialOrder::Grevlex).fmt(f)
    }
}

pub struct DisplayMonomial<'a> {
    pub names: &'a [String],
    pub monomial: &'a Monomial,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        write_monomial(f, self.names, self.monomial)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(Fp::ONE))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::Tiebreak;
    use crate::parse::parse_polynomial;
    use proptest::prelude::*;

    fn ring5() -> Arc<Ring> {
        Ring::new(5, &["x1", "x2", "x3", "x4", "x5"]).unwrap()
    }

    #[test]
    fn leading_terms() {
        let r = Ring::new(7, &["x1", "x2", "x3", "x4"]).unwrap();
        let f = parse_polynomial(&r, "x1*x4 - x2*x3").unwrap();
        let lt = f.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(lt.monomial.exponents(), &[1, 0, 0, 1]);
        assert_eq!(lt.coeff, Fp::ONE);

        let r1 = Ring::new(5, &["x"]).unwrap();
        let three = parse_polynomial(&r1, "3").unwrap();
        let lt = three.leading_term(&MonomialOrder::Lex).unwrap();
        assert!(lt.monomial.is_one());
        assert_eq!(lt.coeff.value(), 3);
        assert_eq!(
            Polynomial::zero(&r1).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial("leading term"))
        );
    }

    #[test]
    fn weighted_leading_term_never_low_weight() {
        let r = ring5();
        let f = parse_polynomial(&r, "x4^4 + x4^2*x5^3 - x1*x3").unwrap();
        let o = MonomialOrder::weight(vec![6, 24, 6, 3, 1], Tiebreak::Grevlex);
        let lt = f.leading_term(&o).unwrap();
        assert_eq!(lt.monomial.weighted_degree(&[6, 24, 6, 3, 1]), 12);
        assert_ne!(lt.monomial.exponents(), &[0, 0, 0, 2, 3]);
    }

    #[test]
    fn initial_forms() {
        let r = ring5();
        let w = [6, 24, 6, 3, 1];
        let f = parse_polynomial(&r, "x4^4 + x4^2*x5^3 - x1*x3").unwrap();
        let expect = parse_polynomial(&r, "x4^4 - x1*x3").unwrap();
        assert_eq!(f.initial_w(&w).unwrap(), expect);
        assert_eq!(expect.initial_w(&w).unwrap(), expect);

        let r2 = Ring::new(3, &["x", "y"]).unwrap();
        let g = parse_polynomial(&r2, "x^2 + y").unwrap();
        assert_eq!(g.initial_w(&[1, 1]).unwrap(), parse_polynomial(&r2, "x^2").unwrap());
        assert!(g.initial_w(&[1, 0]).is_err());
        assert!(Polynomial::zero(&r2).initial_w(&[1, 1]).is_err());
    }

    #[test]
    fn exact_division() {
        let r = Ring::new(3, &["x", "y"]).unwrap();
        let f = parse_polynomial(&r, "x^3*y - x*y^3").unwrap();
        let d = parse_polynomial(&r, "x - y").unwrap();
        assert_eq!(f.exact_div(&d).unwrap(), parse_polynomial(&r, "x^2*y + x*y^2").unwrap());
        assert_eq!(f.exact_div(&parse_polynomial(&r, "x + y + 1").unwrap()), None);
    }

    #[test]
    fn frobenius_is_power() {
        let r = Ring::new(3, &["x", "y"]).unwrap();
        let f = parse_polynomial(&r, "x*y + 2*x - y + 1").unwrap();
        assert_eq!(f.frobenius_power(1).unwrap(), f.checked_pow(3).unwrap());
        assert_eq!(f.frobenius_power(2).unwrap(), f.checked_pow(9).unwrap());
    }

    #[test]
    fn specialize_and_embed() {
        let r = Ring::new(5, &["x", "y"]).unwrap();
        let rt = r.extended("t");
        let f = parse_polynomial(&rt, "x^2 - y*t").unwrap();
        assert_eq!(f.specialize_last(Fp::ONE, &r).unwrap(), parse_polynomial(&r, "x^2 - y").unwrap());
        assert_eq!(f.specialize_last(Fp::ZERO, &r).unwrap(), parse_polynomial(&r, "x^2").unwrap());
        let g = parse_polynomial(&r, "x - y").unwrap();
        assert_eq!(g.embed(&rt).unwrap(), parse_polynomial(&rt, "x - y").unwrap());
    }

    fn poly_strategy(n: usize, p: u64) -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, n), 1..p), 1..6)
    }

    fn build(r: &Arc<Ring>, raw: &[(Vec<u32>, u64)]) -> Polynomial {
        let f = r.field();
        Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exponents(e), f.element(*c)))).unwrap()
    }

    proptest! {
        #[test]
        fn initial_form_is_multiplicative(a in poly_strategy(3, 5), b in poly_strategy(3, 5),
                                          w in prop::collection::vec(1u32..5, 3)) {
            let r = Ring::new(5, &["x", "y", "z"]).unwrap();
            let (f, g) = (build(&r, &a), build(&r, &b));
            prop_assume!(!f.is_zero() && !g.is_zero());
            let lhs = (&f * &g).initial_w(&w).unwrap();
            let rhs = &f.initial_w(&w).unwrap() * &g.initial_w(&w).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weight_order_lead_is_lead_of_initial_form(a in poly_strategy(3, 7),
                                                     w in prop::collection::vec(1u32..5, 3)) {
            let r = Ring::new(7, &["x", "y", "z"]).unwrap();
            let f = build(&r, &a);
            prop_assume!(!f.is_zero());
            for tie in [Tiebreak::Lex, Tiebreak::Grevlex] {
                let o = MonomialOrder::weight(w.clone(), tie);
                let tie_order = match tie { Tiebreak::Lex => MonomialOrder::Lex, Tiebreak::Grevlex => MonomialOrder::Grevlex };
                prop_assert_eq!(f.leading_term(&o).unwrap(),
                                f.initial_w(&w).unwrap().leading_term(&tie_order).unwrap());
            }
        }
    }
}
