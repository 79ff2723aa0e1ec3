//! Reduced Gröbner bases, normal forms and initial ideals.

mod engine;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use engine::Selection;
use engine::{Engine, Reducer, Terms};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Caps on a Gröbner basis computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Critical pairs reduced before giving up.
    pub max_pairs: u64,
    /// Largest total degree allowed for a new basis element.
    pub max_degree: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 1_000_000,
            max_degree: None,
        }
    }
}

fn to_terms(f: &Polynomial, order: &MonomialOrder) -> Terms {
    f.sorted_terms(order)
        .into_iter()
        .map(|t| (t.monomial.clone(), t.coeff))
        .collect()
}

fn from_terms(ring: &Arc<Ring>, mut t: Terms) -> Polynomial {
    t.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Polynomial::from_sorted_unchecked(
        ring,
        t.into_iter().map(|(monomial, coeff)| Term { monomial, coeff }).collect(),
    )
}

fn check_inputs(ring: &Arc<Ring>, polys: &[Polynomial], order: &MonomialOrder) -> Result<()> {
    order.check_arity(ring.nvars())?;
    for f in polys {
        if !Arc::ptr_eq(f.ring(), ring) && **f.ring() != **ring {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// ascending by leading monomial.
pub fn groebner_basis(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
    selection: Selection,
) -> Result<Vec<Polynomial>> {
    check_inputs(ring, gens, order)?;
    let input: Vec<Terms> = gens.iter().filter(|f| !f.is_zero()).map(|f| to_terms(f, order)).collect();
    let out = Engine::new(ring.field(), order, budget).run(input, selection)?;
    Ok(out.into_iter().map(|t| from_terms(ring, t)).collect())
}

/// S-polynomial `(L/lt(f))·f − (L/lt(g))·g` with `L` the lcm of the leading
/// monomials, both scaled to leading coefficient one.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    f.same_ring(g)?;
    let lf = f.leading_term(order)?;
    let lg = g.leading_term(order)?;
    let field = f.ring().field();
    let lcm = lf.monomial.lcm(&lg.monomial);
    let a = f.checked_mul_monomial(&lcm.div(&lf.monomial).unwrap(), field.inv(lf.coeff))?;
    let b = g.checked_mul_monomial(&lcm.div(&lg.monomial).unwrap(), field.inv(lg.coeff))?;
    Ok(&a - &b)
}

/// Remainder of multivariate division of `f` by `divisors` (tried in list
/// order at each step, preferring the shortest). No term of the result is
/// divisible by a leading monomial of a divisor.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    check_inputs(f.ring(), divisors, order)?;
    let mut red = Reducer::new(f.ring().field(), order);
    let mut allowed = Vec::new();
    for g in divisors {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial("divisor"));
        }
        allowed.push(red.push(to_terms(g, order)));
    }
    Ok(from_terms(f.ring(), red.reduce(to_terms(f, order), &allowed)))
}

/// The unique reduced Gröbner basis of an ideal for one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGb {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl ReducedGb {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic elements, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|f| f.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Minimal generators of the initial ideal: the leading monomials.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.leading_monomials()).expect("same ring")
    }

    /// Elements printed with terms descending.
    pub fn display_elements(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|f| f.display_with(&self.order).to_string())
            .collect()
    }
}

/// An ideal given by generators, with reduced Gröbner bases cached per order.
#[derive(Debug)]
pub struct IdealPresentation {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    budget: Budget,
    cache: RwLock<HashMap<MonomialOrder, Arc<ReducedGb>>>,
}

impl Clone for IdealPresentation {
    fn clone(&self) -> Self {
        IdealPresentation {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            budget: self.budget.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl IdealPresentation {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !Arc::ptr_eq(g.ring(), ring) && **g.ring() != **ring {
                return Err(Error::RingMismatch);
            }
        }
        let mut gens: Vec<Polynomial> = Vec::with_capacity(generators.len());
        for g in generators.into_iter().filter(|g| !g.is_zero()) {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            generators: gens,
            budget: Budget::default(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// A new presentation in the same ring carrying this one's budget.
    pub(crate) fn derive(&self, generators: Vec<Polynomial>) -> Result<Self> {
        Ok(Self::new(&self.ring, generators)?.with_budget(self.budget.clone()))
    }

    /// Stores a basis known to be the reduced Gröbner basis for `order`.
    pub(crate) fn seed(&self, gb: ReducedGb) {
        self.cache
            .write()
            .expect("cache lock")
            .insert(gb.order.clone(), Arc::new(gb));
    }

    pub fn reduced_gb(&self, order: &MonomialOrder) -> Result<Arc<ReducedGb>> {
        self.reduced_gb_with(order, Selection::Normal)
    }

    /// Like [`reduced_gb`](Self::reduced_gb) with an explicit pair selection;
    /// the result is cached only for the normal strategy.
    pub fn reduced_gb_with(&self, order: &MonomialOrder, selection: Selection) -> Result<Arc<ReducedGb>> {
        if selection == Selection::Normal {
            if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
                return Ok(gb.clone());
            }
        }
        let elements = groebner_basis(&self.ring, &self.generators, order, &self.budget, selection)?;
        let gb = ReducedGb {
            ring: self.ring.clone(),
            order: order.clone(),
            elements,
        };
        for g in &self.generators {
            if !gb.contains(g)? {
                return Err(Error::Internal(format!("generator {g} does not reduce to zero")));
            }
        }
        let gb = Arc::new(gb);
        if selection == Selection::Normal {
            self.cache
                .write()
                .expect("cache lock")
                .entry(order.clone())
                .or_insert_with(|| gb.clone());
        }
        Ok(gb)
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        Ok(self.reduced_gb(order)?.initial_ideal())
    }

    pub fn member(&self, f: &Polynomial, order: &MonomialOrder) -> Result<bool> {
        f.same_ring(&Polynomial::zero(&self.ring))?;
        self.reduced_gb(order)?.contains(f)
    }

    /// Same ideal, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &IdealPresentation, order: &MonomialOrder) -> Result<bool> {
        Ok(self.reduced_gb(order)?.elements == other.reduced_gb(order)?.elements)
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &IdealPresentation, order: &MonomialOrder) -> Result<bool> {
        let gb = self.reduced_gb(order)?;
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn gb_from_parts(ring: &Arc<Ring>, order: &MonomialOrder, elements: Vec<Polynomial>) -> ReducedGb {
        ReducedGb {
            ring: ring.clone(),
            order: order.clone(),
            elements,
        }
    }
}
