//! The trace map on F_*S, the maps `f ★ Tr`, and splitting checks.
//!
//! `F_*S` is free over S on the monomials `X^a` with every `a_j < p`, and
//! `Tr` is the dual functional of `X^(p-1,…,p-1)`. Every S-linear map
//! `F_*S → S` is `g ↦ Tr(f·g)` for a unique f. Over F_p the p-th root of a
//! coefficient is the coefficient itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::groebner::IdealPresentation;
use crate::ideal_ops::{bracket_power, colon_ideal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Largest `p^n` accepted by [`compatible_check`].
pub const COMPATIBLE_CHECK_LIMIT: u64 = 1 << 16;

/// `Tr(g)`: the term `c·X^a` contributes `c·X^((a − (p−1))/p)` when every
/// `a_j ≡ p − 1 (mod p)`, and nothing otherwise.
pub fn trace(g: &Polynomial) -> Polynomial {
    let ring = g.ring();
    let field = ring.field();
    let p = ring.characteristic();
    let terms = g.terms().iter().filter_map(|t| {
        let e = t.monomial.exponents();
        if e.iter().all(|&a| a % p == p - 1) {
            let q: Vec<u32> = e.iter().map(|&a| (a - (p - 1)) / p).collect();
            Some((Monomial::from_exponents(&q), field.pth_root(t.coeff)))
        } else {
            None
        }
    });
    Polynomial::from_terms(ring, terms).expect("same ring")
}

/// `(f ★ Tr)(g) = Tr(f·g)`.
pub fn star_apply(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    Ok(trace(&f.checked_mul(g)?))
}

/// `θ^N(g)` for `θ = f ★ Tr`.
pub fn trace_iterate(f: &Polynomial, g: &Polynomial, n: u32) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("iteration count must be positive".into()));
    }
    let mut h = g.clone();
    for _ in 0..n {
        h = star_apply(f, &h)?;
    }
    Ok(h)
}

/// `X_1^(p−1)⋯X_n^(p−1)`, the carrier of the standard splitting.
pub fn corner_monomial(nvars: usize, p: u32) -> Monomial {
    Monomial::from_exponents(&vec![p - 1; nvars])
}

/// Why `f ★ Tr` fails to split Frobenius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SplittingViolation {
    /// The coefficient of `X^(p−1,…,p−1)` is not 1.
    CornerCoefficient { coefficient: u32 },
    /// A monomial with every exponent `≡ −1 (mod p)` other than the corner.
    ExtraMonomial { monomial: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingVerdict {
    pub is_splitting: bool,
    pub violation: Option<SplittingViolation>,
}

/// Whether `f ★ Tr` is an F-splitting, read off the support of f: the
/// corner coefficient is 1 and no other monomial has all exponents
/// congruent to −1.
pub fn is_splitting(f: &Polynomial) -> SplittingVerdict {
    let ring = f.ring();
    let p = ring.characteristic();
    let corner = corner_monomial(ring.nvars(), p);
    let c = f.coefficient(&corner);
    if !c.is_one() {
        return SplittingVerdict {
            is_splitting: false,
            violation: Some(SplittingViolation::CornerCoefficient { coefficient: c.value() }),
        };
    }
    let extra = f
        .terms()
        .iter()
        .find(|t| t.monomial != corner && t.monomial.exponents().iter().all(|&a| a % p == p - 1));
    match extra {
        Some(t) => SplittingVerdict {
            is_splitting: false,
            violation: Some(SplittingViolation::ExtraMonomial {
                monomial: Polynomial::monomial(ring, t.monomial.clone(), Fp::ONE).to_string(),
            }),
        },
        None => SplittingVerdict {
            is_splitting: true,
            violation: None,
        },
    }
}

/// `I^[p] : I`.
pub fn fedder_colon(i: &IdealPresentation, order: &MonomialOrder) -> Result<IdealPresentation> {
    if i.is_zero() {
        return Ok(IdealPresentation::unit(i.ring()).with_budget(i.budget().clone()));
    }
    colon_ideal(&bracket_power(i, 1)?, i, order)
}

/// `f ∈ I^[p] : I`, equivalently `(f ★ Tr)(I) ⊆ I`.
pub fn fedder_membership(f: &Polynomial, i: &IdealPresentation, order: &MonomialOrder) -> Result<bool> {
    fedder_colon(i, order)?.member(f, order)
}

/// `(f ★ Tr)(X^a·g) ∈ J` for every generator g of J and every
/// `a ∈ {0,…,p−1}^n`. These elements span J as a module over `S` acting
/// through Frobenius, so this decides `(f ★ Tr)(J) ⊆ J` without any colon
/// computation.
pub fn compatible_check(f: &Polynomial, j: &IdealPresentation, order: &MonomialOrder) -> Result<bool> {
    let ring = j.ring();
    f.same_ring(&Polynomial::zero(ring))?;
    if j.is_zero() {
        return Ok(true);
    }
    let p = ring.characteristic() as u64;
    let n = ring.nvars() as u32;
    let count = p.checked_pow(n).filter(|&c| c <= COMPATIBLE_CHECK_LIMIT).ok_or_else(|| {
        Error::ResourceLimit(format!(
            "p^n = {p}^{n} coset representatives exceed {COMPATIBLE_CHECK_LIMIT}; use fedder_membership"
        ))
    })?;
    let gb = j.reduced_gb(order)?;
    let mut exps = vec![0u32; n as usize];
    for _ in 0..count {
        let xa = Polynomial::monomial(ring, Monomial::from_exponents(&exps), Fp::ONE);
        for g in j.generators() {
            if !gb.contains(&star_apply(f, &xa.checked_mul(g)?)?)? {
                return Ok(false);
            }
        }
        for e in exps.iter_mut() {
            *e += 1;
            if (*e as u64) < p {
                break;
            }
            *e = 0;
        }
    }
    Ok(true)
}

/// Result of the graded Fedder test.
#[derive(Clone, Debug)]
pub struct FsplitVerdict {
    pub split: bool,
    /// `I^[p] : I`.
    pub colon: IdealPresentation,
    /// An element of the colon outside `m^[p]`, when one exists.
    pub witness: Option<Polynomial>,
}

/// Whether `f ∈ (X_1^p, …, X_n^p)`: every term must be divisible by some
/// `X_i^p`.
pub fn in_frobenius_maximal(f: &Polynomial) -> bool {
    let p = f.ring().characteristic();
    f.support().all(|m| m.exponents().iter().any(|&e| e >= p))
}

/// S/I is F-split iff `I^[p] : I ⊄ m^[p]` (for `I ⊆ m`).
pub fn fsplit_graded_test(i: &IdealPresentation, order: &MonomialOrder) -> Result<FsplitVerdict> {
    for g in i.generators() {
        if !g.coefficient(&Monomial::one(i.ring().nvars())).is_zero() {
            return Err(Error::InvalidArgument(
                "the graded test needs an ideal inside the homogeneous maximal ideal".into(),
            ));
        }
    }
    let colon = fedder_colon(i, order)?;
    let witness = colon
        .reduced_gb(order)?
        .elements()
        .iter()
        .find(|g| !in_frobenius_maximal(g))
        .cloned();
    Ok(FsplitVerdict {
        split: witness.is_some(),
        colon,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use std::sync::Arc;

    fn poly(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    fn ideal(r: &Arc<Ring>, src: &[&str]) -> IdealPresentation {
        IdealPresentation::new(r, src.iter().map(|s| poly(r, s)).collect()).unwrap()
    }

    #[test]
    fn trace_values() {
        let r = Ring::new(3, &["x1", "x2"]).unwrap();
        assert_eq!(trace(&poly(&r, "x1^2*x2^2")), Polynomial::one(&r));
        assert_eq!(trace(&poly(&r, "x1^5*x2^2")), poly(&r, "x1"));
        assert!(trace(&poly(&r, "x1^4*x2^2")).is_zero());
        assert_eq!(trace(&poly(&r, "2*x1^2*x2^2 + x1^8*x2^5 + x1")), poly(&r, "2 + x1^2*x2"));
    }

    #[test]
    fn star_values() {
        let r = Ring::new(2, &["x"]).unwrap();
        let x = poly(&r, "x");
        assert_eq!(star_apply(&x, &Polynomial::one(&r)).unwrap(), Polynomial::one(&r));
        assert!(star_apply(&x, &x).unwrap().is_zero());
        for p in [2u64, 3, 5] {
            for n in 1..=3usize {
                let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
                let r = Ring::new(p, &names).unwrap();
                let corner = Polynomial::monomial(&r, corner_monomial(n, p as u32), Fp::ONE);
                assert_eq!(star_apply(&corner, &Polynomial::one(&r)).unwrap(), Polynomial::one(&r));
            }
        }
    }

    #[test]
    fn iterates() {
        let r = Ring::new(2, &["x"]).unwrap();
        let one = Polynomial::one(&r);
        let x3 = poly(&r, "x^3");
        assert_eq!(trace_iterate(&one, &x3, 1).unwrap(), poly(&r, "x"));
        assert_eq!(trace_iterate(&one, &x3, 2).unwrap(), one);
        let f = poly(&r, "x + x^3");
        assert_eq!(trace_iterate(&f, &x3, 1).unwrap(), star_apply(&f, &x3).unwrap());
        let r3 = Ring::new(3, &["a", "b"]).unwrap();
        let g = poly(&r3, "a^26*b^26");
        assert_eq!(trace_iterate(&Polynomial::one(&r3), &g, 3).unwrap(), Polynomial::one(&r3));
    }

    #[test]
    fn splitting_conditions() {
        let r = Ring::new(2, &["x1", "x2"]).unwrap();
        assert!(is_splitting(&poly(&r, "x1*x2")).is_splitting);
        let v = is_splitting(&poly(&r, "x1*x2 + x1^3*x2^3"));
        assert!(!v.is_splitting);
        assert_eq!(v.violation, Some(SplittingViolation::ExtraMonomial { monomial: "x1^3*x2^3".into() }));
        assert!(is_splitting(&poly(&r, "x1*x2 + x1^2 + x2 + 1")).is_splitting);
        let r5 = Ring::new(5, &["x1", "x2"]).unwrap();
        let v = is_splitting(&poly(&r5, "2*x1^4*x2^4"));
        assert_eq!(v.violation, Some(SplittingViolation::CornerCoefficient { coefficient: 2 }));
    }

    #[test]
    fn fedder_examples() {
        let r = Ring::new(2, &["x", "y"]).unwrap();
        let o = MonomialOrder::Lex;
        assert!(fedder_membership(&poly(&r, "x*y"), &ideal(&r, &["x*y"]), &o).unwrap());
        assert!(!fedder_membership(&Polynomial::one(&r), &ideal(&r, &["x"]), &o).unwrap());
        let r4 = Ring::new(2, &["x1", "x2", "x3", "x4"]).unwrap();
        let g = "x1*x4 - x2*x3";
        assert!(fedder_membership(&poly(&r4, g), &ideal(&r4, &[g]), &o).unwrap());
    }

    #[test]
    fn compatibility_examples() {
        let r = Ring::new(3, &["x1", "x2"]).unwrap();
        let o = MonomialOrder::Grevlex;
        let theta = Polynomial::monomial(&r, corner_monomial(2, 3), Fp::ONE);
        assert!(compatible_check(&theta, &ideal(&r, &["x1*x2"]), &o).unwrap());
        assert!(!compatible_check(&theta, &ideal(&r, &["x1^2"]), &o).unwrap());
        assert!(compatible_check(&poly(&r, "x1 + 2"), &ideal(&r, &["0"]), &o).unwrap());
        let big: Vec<String> = (0..20).map(|i| format!("y{i}")).collect();
        let rb = Ring::new(3, &big).unwrap();
        let j = IdealPresentation::new(&rb, vec![Polynomial::var(&rb, 0)]).unwrap();
        assert!(matches!(compatible_check(&Polynomial::one(&rb), &j, &o), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn graded_fedder_test() {
        let r = Ring::new(2, &["x", "y"]).unwrap();
        let o = MonomialOrder::Lex;
        let v = fsplit_graded_test(&ideal(&r, &["x*y"]), &o).unwrap();
        assert!(v.split);
        assert_eq!(v.witness, Some(poly(&r, "x*y")));
        assert!(!fsplit_graded_test(&ideal(&r, &["x^2"]), &o).unwrap().split);
        assert!(fsplit_graded_test(&ideal(&r, &["x + 1"]), &o).is_err());
        let r3 = Ring::new(2, &["x1", "x2", "x3"]).unwrap();
        assert!(fsplit_graded_test(&ideal(&r3, &["x1*x3", "x1*x2", "x2*x3"]), &o).unwrap().split);
    }
}
