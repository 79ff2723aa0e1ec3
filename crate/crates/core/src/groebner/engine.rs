//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Polynomials are handled as term vectors sorted descending by the active
//! order and kept monic. Pairs are picked by sugar degree, then by the
//! degree of their lcm, then by the order on lcms.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

use super::Budget;

pub(crate) type Terms = Vec<(Monomial, Fp)>;

/// How the next critical pair is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Smallest sugar, then smallest lcm.
    Normal,
    /// Uniformly random pair from the queue (seeded). The reduced basis
    /// does not depend on the choice; this exists to test that.
    Random(u64),
}

/// Divisor search and multivariate division against a fixed list.
pub(crate) struct Reducer<'a> {
    pub field: PrimeField,
    pub order: &'a MonomialOrder,
    divisors: Vec<Terms>,
    masks: Vec<u64>,
}

/// `a - c·m·b`, both sorted descending.
fn sub_scaled(field: PrimeField, order: &MonomialOrder, a: &[(Monomial, Fp)], c: Fp, m: &Monomial, b: &[(Monomial, Fp)]) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: usize| -> (Monomial, Fp) {
        let (bm, bc) = &b[j];
        (bm.mul(m), field.neg(field.mul(*bc, c)))
    };
    let mut pending = if b.is_empty() { None } else { Some(next_b(0)) };
    while i < a.len() {
        let Some((bm, bc)) = pending.as_ref() else { break };
        match order.cmp(&a[i].0, bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm.clone(), *bc));
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
            std::cmp::Ordering::Equal => {
                let s = field.add(a[i].1, *bc);
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(t) = pending {
        out.push(t);
        j += 1;
        while j < b.len() {
            out.push(next_b(j));
            j += 1;
        }
    }
    out
}

impl<'a> Reducer<'a> {
    pub fn new(field: PrimeField, order: &'a MonomialOrder) -> Self {
        Reducer {
            field,
            order,
            divisors: Vec::new(),
            masks: Vec::new(),
        }
    }

    /// Adds a divisor (made monic). Returns its index.
    pub fn push(&mut self, mut f: Terms) -> usize {
        debug_assert!(!f.is_empty());
        let lc = f[0].1;
        if !lc.is_one() {
            let inv = self.field.inv(lc);
            for t in f.iter_mut() {
                t.1 = self.field.mul(t.1, inv);
            }
        }
        self.masks.push(f[0].0.support_mask());
        self.divisors.push(f);
        self.divisors.len() - 1
    }

    pub fn get(&self, i: usize) -> &Terms {
        &self.divisors[i]
    }

    pub fn replace(&mut self, i: usize, f: Terms) {
        self.divisors[i] = f;
    }

    fn find_divisor(&self, m: &Monomial, allowed: &[usize]) -> Option<usize> {
        let mask = m.support_mask();
        allowed
            .iter()
            .copied()
            .filter(|&k| self.masks[k] & !mask == 0 && self.divisors[k][0].0.divides(m))
            .min_by(|&a, &b| self.order.cmp(&self.divisors[a][0].0, &self.divisors[b][0].0))
    }

    /// Full reduction of `f` by the divisors listed in `allowed`.
    pub fn reduce(&self, mut f: Terms, allowed: &[usize]) -> Terms {
        let mut out = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let (m, c) = (&f[start].0, f[start].1);
            match self.find_divisor(m, allowed) {
                Some(k) => {
                    let g = &self.divisors[k];
                    let q = m.div(&g[0].0).expect("divisor");
                    f = sub_scaled(self.field, self.order, &f[start + 1..], c, &q, &g[1..]);
                    start = 0;
                }
                None => {
                    out.push(f[start].clone());
                    start += 1;
                }
            }
        }
        out
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

pub(crate) struct Engine<'a> {
    red: Reducer<'a>,
    sugar: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    budget: &'a Budget,
    processed: u64,
}

fn degree(f: &Terms) -> u64 {
    f.iter().map(|t| t.0.degree()).max().unwrap_or(0)
}

impl<'a> Engine<'a> {
    pub fn new(field: PrimeField, order: &'a MonomialOrder, budget: &'a Budget) -> Self {
        Engine {
            red: Reducer::new(field, order),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            budget,
            processed: 0,
        }
    }

    fn lead(&self, i: usize) -> &Monomial {
        &self.red.get(i)[0].0
    }

    /// Gebauer–Möller installation of a new, fully reduced element.
    fn update(&mut self, h: Terms, sugar: u64) {
        let hi = self.red.push(h);
        self.sugar.push(sugar);
        let lh = self.lead(hi).clone();

        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.lead(g).lcm(&lh)))
            .collect();
        let mut keep = vec![false; candidates.len()];
        for (a, (g, lcm)) in candidates.iter().enumerate() {
            let coprime = self.lead(*g).is_coprime(&lh);
            let dominated = candidates.iter().enumerate().any(|(b, (_, other))| {
                // Pairs still in C (after a) or already kept in D.
                b != a && (b > a || keep[b]) && other.divides(lcm) && (other != lcm || b < a)
            });
            keep[a] = coprime || !dominated;
        }
        let new_pairs: Vec<Pair> = candidates
            .into_iter()
            .zip(keep)
            .filter(|((g, _), k)| *k && !self.lead(*g).is_coprime(&lh))
            .map(|((g, lcm), _)| {
                let sg = self.sugar[g] + lcm.degree() - self.lead(g).degree();
                let sh = sugar + lcm.degree() - lh.degree();
                Pair {
                    i: g,
                    j: hi,
                    lcm,
                    sugar: sg.max(sh),
                }
            })
            .collect();

        let red = &self.red;
        self.pairs.retain(|pr| {
            !(lh.divides(&pr.lcm)
                && red.get(pr.i)[0].0.lcm(&lh) != pr.lcm
                && red.get(pr.j)[0].0.lcm(&lh) != pr.lcm)
        });
        self.pairs.extend(new_pairs);

        let red = &self.red;
        self.active.retain(|&g| !lh.divides(&red.get(g)[0].0));
        self.active.push(hi);
    }

    fn select(&mut self, selection: Selection, rng: &mut Option<StdRng>) -> Pair {
        let idx = match selection {
            Selection::Random(_) => rng.as_mut().expect("rng").gen_range(0..self.pairs.len()),
            Selection::Normal => {
                let order = self.red.order;
                let by_degree = !matches!(order, MonomialOrder::Lex | MonomialOrder::Elimination { .. });
                let mut best = 0;
                for k in 1..self.pairs.len() {
                    let (a, b) = (&self.pairs[k], &self.pairs[best]);
                    let degrees = || {
                        a.sugar
                            .cmp(&b.sugar)
                            .then_with(|| a.lcm.degree().cmp(&b.lcm.degree()))
                    };
                    let better = if by_degree {
                        degrees().then_with(|| order.cmp(&a.lcm, &b.lcm))
                    } else {
                        order.cmp(&a.lcm, &b.lcm).then_with(degrees)
                    }
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
                    if better == std::cmp::Ordering::Less {
                        best = k;
                    }
                }
                best
            }
        };
        self.pairs.swap_remove(idx)
    }

    fn s_poly(&self, pr: &Pair) -> Terms {
        let f = self.red.get(pr.i);
        let g = self.red.get(pr.j);
        let mf = pr.lcm.div(&f[0].0).expect("lcm");
        let mg = pr.lcm.div(&g[0].0).expect("lcm");
        let scaled_f: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), *c)).collect();
        sub_scaled(self.red.field, self.red.order, &scaled_f, Fp::ONE, &mg, &g[1..])
    }

    fn check_degree(&self, f: &Terms) -> Result<()> {
        if let Some(max) = self.budget.max_degree {
            let d = degree(f);
            if d > max {
                return Err(Error::ResourceLimit(format!(
                    "intermediate degree {d} exceeds the cap of {max}"
                )));
            }
        }
        Ok(())
    }

    /// Runs to completion and returns the reduced basis, each element
    /// sorted descending, the whole list ascending by leading monomial.
    pub fn run(mut self, input: Vec<Terms>, selection: Selection) -> Result<Vec<Terms>> {
        let mut rng = match selection {
            Selection::Random(seed) => Some(StdRng::seed_from_u64(seed)),
            Selection::Normal => None,
        };
        let mut input: Vec<Terms> = input.into_iter().filter(|f| !f.is_empty()).collect();
        input.sort_by(|a, b| self.red.order.cmp(&a[0].0, &b[0].0));
        // Inputs go in unreduced: reducing them against each other under lex
        // can push tails to very high degree. The final pass minimalizes.
        for f in input {
            if f[0].0.is_one() {
                return Ok(vec![vec![(f[0].0.clone(), Fp::ONE)]]);
            }
            let s = degree(&f);
            self.update(f, s);
        }

        while !self.pairs.is_empty() {
            self.processed += 1;
            if self.processed > self.budget.max_pairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} critical pairs",
                    self.budget.max_pairs
                )));
            }
            let pr = self.select(selection, &mut rng);
            let s = self.s_poly(&pr);
            let h = self.red.reduce(s, &self.active);
            if h.is_empty() {
                continue;
            }
            self.check_degree(&h)?;
            if h[0].0.is_one() {
                return Ok(vec![vec![(h[0].0.clone(), Fp::ONE)]]);
            }
            self.update(h, pr.sugar);
        }

        let mut sorted = self.active.clone();
        sorted.sort_by(|&a, &b| self.red.order.cmp(self.lead(a), self.lead(b)));
        let mut basis: Vec<usize> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !basis.iter().any(|&b| self.lead(b).divides(self.lead(g))) {
                basis.push(g);
            }
        }
        for (k, &g) in basis.iter().enumerate() {
            let others: Vec<usize> = basis.iter().copied().enumerate().filter(|&(l, _)| l != k).map(|(_, x)| x).collect();
            let f = self.red.get(g).clone();
            let head = f[0].clone();
            let tail = self.red.reduce(f[1..].to_vec(), &others);
            let mut out = Vec::with_capacity(tail.len() + 1);
            out.push(head);
            out.extend(tail);
            self.red.replace(g, out);
        }
        Ok(basis.into_iter().map(|g| self.red.get(g).clone()).collect())
    }
}
