//! Gröbner bases by plain linear algebra, kept separate from the Buchberger
//! engine so the two can be checked against each other.
//!
//! All multiples `m·g` of the generators with total degree at most `D`
//! are written as rows of a coefficient matrix whose columns are the
//! monomials of degree at most `D`, sorted descending by the order. After
//! row reduction the pivot columns are leading monomials of ideal elements.
//! Once `D` is large enough the minimal pivots are the minimal generators
//! of the initial ideal, and the rows carrying them form the reduced basis.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::field::{Fp, PrimeField};
use crate::monomial::Monomial;
use crate::monomial_ideal::minimalize;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Monomials in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

fn rref(field: PrimeField, rows: &mut Vec<Vec<Fp>>, ncols: usize) {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]);
        for x in rows[rank][col..].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for k in col..ncols {
                if !pivot_row[k].is_zero() {
                    row[k] = field.sub(row[k], field.mul(c, pivot_row[k]));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
}

/// The candidate basis read off the degree-`d` matrix, or `None` when a
/// tail still contains a monomial of the candidate initial ideal (the
/// truncation is visibly too small).
pub fn truncated_basis(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    d: u32,
) -> Result<Option<Vec<Polynomial>>> {
    order.check_arity(ring.nvars())?;
    let n = ring.nvars();
    let field = ring.field();
    let mut cols = monomials_up_to(n, d);
    cols.sort_by(|a, b| order.cmp(b, a));
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap_or(0) as u32;
        if dg > d {
            continue;
        }
        for m in monomials_up_to(n, d - dg) {
            let mut row = vec![Fp::ZERO; cols.len()];
            for t in g.terms() {
                let mm = t.monomial.checked_mul(&m)?;
                row[index[&mm]] = t.coeff;
            }
            rows.push(row);
        }
    }
    rref(field, &mut rows, cols.len());

    let pivots: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| (r, row.iter().position(|x| !x.is_zero()).expect("nonzero row")))
        .collect();
    let minimal = minimalize(pivots.iter().map(|&(_, c)| cols[c].clone()).collect());
    let mut basis = Vec::new();
    for &(r, c) in &pivots {
        if !minimal.contains(&cols[c]) {
            continue;
        }
        let terms: Vec<(Monomial, Fp)> = rows[r]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (cols[k].clone(), *x))
            .collect();
        if terms[1..].iter().any(|(m, _)| minimal.iter().any(|l| l.divides(m))) {
            return Ok(None);
        }
        basis.push((cols[c].clone(), Polynomial::from_terms(ring, terms)?));
    }
    basis.sort_by(|a, b| order.cmp(&a.0, &b.0));
    Ok(Some(basis.into_iter().map(|(_, f)| f).collect()))
}

/// Plain multivariate division, written out here so the oracle does not
/// lean on the engine's reducer.
fn remainder(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let field = f.ring().field();
    let mut rest = f.clone();
    let mut out = Polynomial::zero(f.ring());
    while !rest.is_zero() {
        let lt = rest.leading_term(order)?;
        let hit = divisors.iter().find_map(|g| {
            let lg = g.leading_term(order).ok()?;
            lt.monomial.div(&lg.monomial).map(|q| (g, q, field.mul(lt.coeff, field.inv(lg.coeff))))
        });
        match hit {
            Some((g, q, c)) => rest = &rest - &g.checked_mul_monomial(&q, c)?,
            None => {
                let head = Polynomial::monomial(f.ring(), lt.monomial, lt.coeff);
                rest = &rest - &head;
                out = &out + &head;
            }
        }
    }
    Ok(out)
}

/// Buchberger's criterion plus membership of the generators: together they
/// prove the candidate is a Gröbner basis of exactly the input ideal.
fn certifies(gens: &[Polynomial], basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    for g in gens {
        if !remainder(g, basis, order)?.is_zero() {
            return Ok(false);
        }
    }
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let lf = f.leading_term(order)?;
            let lg = g.leading_term(order)?;
            let l = lf.monomial.lcm(&lg.monomial);
            let s = &f.checked_mul_monomial(&l.div(&lf.monomial).expect("lcm"), lg.coeff)?
                - &g.checked_mul_monomial(&l.div(&lg.monomial).expect("lcm"), lf.coeff)?;
            if !remainder(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Raises the truncation degree until the candidate passes Buchberger's
/// criterion. Returns `None` if that does not happen by `max_degree`.
pub fn reduced_basis(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    max_degree: u32,
) -> Result<Option<Vec<Polynomial>>> {
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(Some(Vec::new()));
    }
    let start = gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0) as u32;
    for d in start..=max_degree {
        if let Some(candidate) = truncated_basis(ring, gens, order, d)? {
            if certifies(gens, &candidate, order)? {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn counts_monomials() {
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(1, 4).len(), 5);
    }

    #[test]
    fn hand_example() {
        let r = Ring::new(7, &["x", "y"]).unwrap();
        let gens: Vec<Polynomial> = ["x^2 - y", "x*y - 1"].iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
        let gb = reduced_basis(&r, &gens, &MonomialOrder::Lex, 8).unwrap().unwrap();
        let want: Vec<Polynomial> = ["y^3 - 1", "x - y^2"].iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
        assert_eq!(gb, want);
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(2, &["x"]).unwrap();
        let gens = vec![parse_polynomial(&r, "x").unwrap(), parse_polynomial(&r, "x + 1").unwrap()];
        let gb = reduced_basis(&r, &gens, &MonomialOrder::Grevlex, 4).unwrap().unwrap();
        assert_eq!(gb, vec![Polynomial::one(&r)]);
    }
}
