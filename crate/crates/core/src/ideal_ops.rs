//! Intersection, colon, saturation, powers and w-homogenization.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::groebner::{groebner_basis, IdealPresentation, Selection};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

fn same_ring(a: &IdealPresentation, b: &IdealPresentation) -> Result<()> {
    if Arc::ptr_eq(a.ring(), b.ring()) || **a.ring() == **b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// A ∩ B by eliminating `t` from `t·A + (1 − t)·B`.
pub fn intersect(a: &IdealPresentation, b: &IdealPresentation, order: &MonomialOrder) -> Result<IdealPresentation> {
    same_ring(a, b)?;
    let ring = a.ring();
    order.check_arity(ring.nvars())?;
    if a.is_zero() || b.is_zero() {
        return a.derive(Vec::new());
    }
    let ext = ring.extended("t");
    let n = ring.nvars();
    let t = Polynomial::var(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(t.checked_mul(&f.embed(&ext)?)?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.checked_mul(&g.embed(&ext)?)?);
    }
    let elim = MonomialOrder::eliminate(1, order.clone());
    let gb = groebner_basis(&ext, &gens, &elim, a.budget(), Selection::Normal)?;
    let mut kept = Vec::new();
    for f in gb {
        if f.terms().iter().all(|term| term.monomial.exponents()[n] == 0) {
            kept.push(f.specialize_last(Fp::ZERO, ring)?);
        }
    }
    // A reduced basis restricted to the t-free part is the reduced basis of
    // the elimination ideal, already sorted by lead.
    let out = a.derive(kept.clone())?;
    out.seed(IdealPresentation::gb_from_parts(ring, order, kept));
    Ok(out)
}

/// I : f = (I ∩ (f)) / f.
pub fn colon(i: &IdealPresentation, f: &Polynomial, order: &MonomialOrder) -> Result<IdealPresentation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon by zero"));
    }
    f.same_ring(&Polynomial::zero(i.ring()))?;
    if f.is_unit() {
        return i.derive(i.generators().to_vec());
    }
    let principal = i.derive(vec![f.clone()])?;
    let meet = intersect(i, &principal, order)?;
    let mut gens = Vec::with_capacity(meet.generators().len());
    for h in meet.generators() {
        gens.push(
            h.exact_div(f)
                .ok_or_else(|| Error::Internal("element of I ∩ (f) not divisible by f".into()))?,
        );
    }
    i.derive(gens)
}

/// I : J, the intersection of I : g over the generators g of J.
pub fn colon_ideal(i: &IdealPresentation, j: &IdealPresentation, order: &MonomialOrder) -> Result<IdealPresentation> {
    same_ring(i, j)?;
    if j.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero ideal".into()));
    }
    let gb = i.reduced_gb(order)?;
    let mut acc: Option<IdealPresentation> = None;
    for g in j.generators() {
        // I : g is the unit ideal for g in I.
        if gb.contains(g)? {
            continue;
        }
        let c = colon(i, g, order)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c, order)?,
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => Ok(IdealPresentation::unit(i.ring()).with_budget(i.budget().clone())),
    }
}

/// I : f^∞ together with the first k with I : f^k = I : f^(k+1).
#[derive(Clone, Debug)]
pub struct Saturation {
    pub ideal: IdealPresentation,
    pub exponent: u32,
}

pub fn saturate(i: &IdealPresentation, f: &Polynomial, order: &MonomialOrder) -> Result<Saturation> {
    let mut current = i.clone();
    let mut k = 0;
    loop {
        let next = colon(&current, f, order)?;
        if next.same_ideal(&current, order)? {
            return Ok(Saturation {
                ideal: current,
                exponent: k,
            });
        }
        current = next;
        k += 1;
    }
}

/// I^m, generated by all m-fold products of generators.
pub fn power(i: &IdealPresentation, m: u32) -> Result<IdealPresentation> {
    if m == 0 {
        return Err(Error::InvalidArgument("power exponent must be positive".into()));
    }
    let gens = i.generators();
    let mut products: Vec<(usize, Polynomial)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..m {
        let mut next = Vec::new();
        for (last, p) in &products {
            for (k, g) in gens.iter().enumerate().skip(*last) {
                next.push((k, p.checked_mul(g)?));
            }
        }
        products = next;
    }
    i.derive(products.into_iter().map(|(_, p)| p).collect())
}

/// I^[p^e], generated by the p^e-th powers of the generators.
pub fn bracket_power(i: &IdealPresentation, e: u32) -> Result<IdealPresentation> {
    if e == 0 {
        return Err(Error::InvalidArgument("bracket power exponent must be positive".into()));
    }
    let gens = i
        .generators()
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    i.derive(gens)
}

/// P^m : g^∞ for a prime P and a witness g outside P.
pub fn symbolic_power_prime(
    p: &IdealPresentation,
    m: u32,
    witness: &Polynomial,
    order: &MonomialOrder,
) -> Result<IdealPresentation> {
    if p.member(witness, order)? {
        return Err(Error::WitnessInPrime(witness.display_with(order).to_string()));
    }
    Ok(saturate(&power(p, m)?, witness, order)?.ideal)
}

fn check_weight(ring: &Ring, w: &[u32]) -> Result<()> {
    if w.len() != ring.nvars() || w.contains(&0) {
        return Err(Error::InvalidWeight { expected: ring.nvars() });
    }
    Ok(())
}

/// The w-homogenization of f in the ring extended by `t` (weight 1).
pub fn homogenize_poly(f: &Polynomial, w: &[u32], ext: &Arc<Ring>) -> Result<Polynomial> {
    check_weight(f.ring(), w)?;
    let Some(d) = f.weighted_degree(w) else {
        return Ok(Polynomial::zero(ext));
    };
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let gap = d - t.monomial.weighted_degree(w);
            let gap = u32::try_from(gap).map_err(|_| Error::ExponentOverflow)?;
            Ok((t.monomial.extend_with(gap), t.coeff))
        })
        .collect::<Result<Vec<(Monomial, Fp)>>>()?;
    Polynomial::from_terms(ext, terms)
}

/// hom_w(I) ⊂ S[t], from a basis of I for the weight order refined by the
/// tiebreak of `order`.
pub fn homogenize_w(i: &IdealPresentation, w: &[u32], order: &MonomialOrder) -> Result<IdealPresentation> {
    let ring = i.ring();
    check_weight(ring, w)?;
    let worder = MonomialOrder::weight(w.to_vec(), order.tiebreak());
    let gb = i.reduced_gb(&worder)?;
    let ext = ring.extended("t");
    let gens = gb
        .elements()
        .iter()
        .map(|g| homogenize_poly(g, w, &ext))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealPresentation::new(&ext, gens)?.with_budget(i.budget().clone()))
}

/// t ↦ 1, landing in `base` (the ring without the trailing variable).
pub fn dehomogenize(f: &Polynomial, base: &Arc<Ring>) -> Result<Polynomial> {
    f.specialize_last(Fp::ONE, base)
}

/// Krull dimension of S/M.
pub fn monomial_dimension(m: &MonomialIdeal) -> Result<usize> {
    m.dimension()
}
