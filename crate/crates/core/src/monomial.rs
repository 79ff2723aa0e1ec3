use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 12]>;

/// A monomial stored as a dense exponent vector.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors;
/// it is the canonical storage order for polynomial terms and has nothing to
/// do with the monomial order requested by an algorithm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Σ wᵢ·eᵢ.
    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        self.0.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Every exponent at most one.
    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    /// Product; panics on exponent overflow. Internal arithmetic uses this
    /// where inputs are already bounded by validated ones.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for &e in self.0.iter() {
            out.push(e.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out))
    }

    pub(crate) fn extend_with(&self, extra: u32) -> Monomial {
        let mut out = self.0.clone();
        out.push(extra);
        Monomial(out)
    }

    pub(crate) fn truncate_last(&self, k: usize) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[..self.0.len() - k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree() {
        assert!(Monomial::from_exponents(&[1, 1, 1]).is_squarefree());
        assert!(!Monomial::from_exponents(&[2, 0]).is_squarefree());
        assert!(Monomial::from_exponents(&[]).is_squarefree());
        assert!(Monomial::one(3).is_squarefree());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&b).div(&a).unwrap().exponents(), &[0, 3, 0]);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(3, 1).is_coprime(&a));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::from_exponents(&[u32::MAX - 1]);
        assert_eq!(a.checked_pow(2), Err(Error::ExponentOverflow));
        assert_eq!(a.checked_mul(&a), Err(Error::ExponentOverflow));
    }

    #[test]
    fn degrees() {
        let m = Monomial::from_exponents(&[4, 0, 0, 0, 0]);
        assert_eq!(m.weighted_degree(&[6, 24, 6, 3, 1]), 24);
        assert_eq!(Monomial::from_exponents(&[0, 0, 0, 2, 3]).weighted_degree(&[6, 24, 6, 3, 1]), 9);
        assert_eq!(m.degree(), 4);
    }
}
