//! Monomial ideals given by their minimal generators.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::DisplayMonomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    generators: Vec<Monomial>,
}

/// Drops every monomial divisible by another one; output in canonical order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    found: g.nvars(),
                });
            }
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            generators: minimalize(gens),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Minimal generators sorted descending by `order`.
    pub fn sorted_generators(&self, order: &MonomialOrder) -> Vec<&Monomial> {
        let mut v: Vec<&Monomial> = self.generators.iter().collect();
        v.sort_by(|a, b| order.cmp(b, a));
        v
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// All minimal generators squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Some squarefree monomial lies in the ideal. Divisors of squarefree
    /// monomials are squarefree, so it suffices to look at minimal generators.
    pub fn squarefree_member(&self) -> Option<&Monomial> {
        self.generators.iter().find(|g| g.is_squarefree())
    }

    /// Krull dimension of S/M: the largest set Z of variables such that no
    /// minimal generator is supported inside Z.
    pub fn dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::InvalidArgument("dimension of the unit ideal".into()));
        }
        let n = self.ring.nvars();
        if n > 26 {
            return Err(Error::ResourceLimit(format!("subset enumeration over {n} variables")));
        }
        let supports: Vec<u32> = self
            .generators
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();
        // Independent sets are closed under taking subsets, so search by
        // decreasing size and stop at the first hit.
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut best = 0usize;
        for mask in 0..=full {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !mask != 0) {
                best = size;
                if best == n {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Codimension n − dim S/M.
    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.dimension()?)
    }

    pub fn display_generators(&self, order: &MonomialOrder) -> Vec<String> {
        self.sorted_generators(order)
            .into_iter()
            .map(|m| {
                DisplayMonomial {
                    names: self.ring.names(),
                    monomial: m,
                }
                .to_string()
            })
            .collect()
    }
}
