//! Arithmetic in the prime field F_p.
//!
//! Residues are plain `u32` values in `[0, p)`; the modulus lives in a
//! [`PrimeField`] context shared by every polynomial of a ring. Products are
//! formed in `u64`, so any prime below 2^31 is supported.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A residue class modulo the ring's prime. Always fully reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

/// The field F_p. Cheap to copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::ModulusTooLarge(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    pub fn element(self, v: u64) -> Fp {
        Fp((v % self.p as u64) as u32)
    }

    pub fn from_i64(self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(self, a: Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(self, a: Fp, b: Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(self, a: Fp, mut e: u64) -> Fp {
        let mut base = a;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem. Panics on zero.
    pub fn inv(self, a: Fp) -> Fp {
        assert!(!a.is_zero(), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// The p-th root. Frobenius is the identity on F_p, so this is `a`.
    pub fn pth_root(self, a: Fp) -> Fp {
        debug_assert_eq!(self.pow(a, self.p as u64), a);
        a
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: Fp) -> i64 {
        if a.0 as u64 * 2 > self.p as u64 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert_eq!(PrimeField::new(4_294_967_291), Err(Error::ModulusTooLarge(4_294_967_291)));
    }

    #[test]
    fn field_axioms_small_primes() {
        for p in (2..=31u64).filter(|&p| is_prime(p)) {
            let f = PrimeField::new(p).unwrap();
            let all: Vec<Fp> = (0..p).map(|v| f.element(v)).collect();
            for &a in &all {
                assert_eq!(f.add(a, f.neg(a)), Fp::ZERO);
                assert_eq!(f.pow(a, p), a, "Frobenius is the identity");
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.pow(a, p - 2)), Fp::ONE);
                    assert_eq!(f.mul(a, f.inv(a)), Fp::ONE);
                }
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for &c in &all {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn signed_representative() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.signed(f.element(4)), -1);
        assert_eq!(f.signed(f.element(2)), 2);
        assert_eq!(f.signed(f.element(3)), -2);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.signed(Fp::ONE), 1);
        assert_eq!(f.from_i64(-7), f.element(3));
    }
}
