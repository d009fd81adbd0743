//! Prime field arithmetic for a modulus chosen at runtime.
//!
//! Elements are bare one-byte residues; the modulus lives in a [`PrimeField`]
//! context so that long coefficient vectors stay compact.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported prime (residues fit in one byte).
pub const MAX_PRIME: u32 = 251;

/// A residue in `[0, p)`. The modulus is carried by the [`PrimeField`] that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u8,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Validates `p` by trial division.
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u8 })
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.p
    }

    /// Checked conversion of a canonical residue.
    pub fn elem(&self, value: u32) -> Result<Fe> {
        if value < self.p as u32 {
            Ok(Fe(value as u8))
        } else {
            Err(Error::NotAResidue { value, p: self.p })
        }
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn reduce(&self, value: i64) -> Fe {
        Fe(value.rem_euclid(self.p as i64) as u8)
    }

    /// Rejects elements that are not residues of this field, which is how an
    /// element built under a different modulus shows up.
    pub fn check(&self, a: Fe) -> Result<Fe> {
        self.elem(a.0 as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.p && b.0 < self.p);
        let s = a.0 as u16 + b.0 as u16;
        let p = self.p as u16;
        Fe(if s >= p { s - p } else { s } as u8)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        debug_assert!(a.0 < self.p);
        if a.0 == 0 {
            a
        } else {
            Fe(self.p - a.0)
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.p && b.0 < self.p);
        Fe(((a.0 as u16 * b.0 as u16) % self.p as u16) as u8)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i32, a.0 as i32);
        let (mut t0, mut t1) = (0i32, 1i32);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce(t0 as i64))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `n! mod p`.
    pub fn factorial(&self, n: u32) -> Fe {
        (1..=n as i64).fold(Fe::ONE, |acc, k| self.mul(acc, self.reduce(k)))
    }

    /// All elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.p).map(Fe)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(f(2).add(Fe(1), Fe(1)), Fe(0));
        assert_eq!(f(3).add(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f(5).add(Fe(0), Fe(4)), Fe(4));
        assert_eq!(f(3).mul(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f(5).mul(Fe(1), Fe(4)), Fe(4));
        assert_eq!(f(7).mul(Fe(3), Fe(5)), Fe(1));
        assert_eq!(f(2).inv(Fe(1)).unwrap(), Fe(1));
        assert_eq!(f(5).inv(Fe(2)).unwrap(), Fe(3));
        assert_eq!(f(7).inv(Fe(3)).unwrap(), Fe(5));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(249), Err(Error::NotPrime(249)));
        assert_eq!(PrimeField::new(257), Err(Error::ModulusOutOfRange(257)));
        assert!(PrimeField::new(251).is_ok());
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(f(5).inv(Fe::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn foreign_residue_is_rejected() {
        let big = f(7).elem(5).unwrap();
        assert!(f(5).check(big).is_err());
        assert!(f(7).check(big).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let k = f(p);
            let els: Vec<Fe> = k.elements().collect();
            for &a in &els {
                assert_eq!(k.add(a, Fe::ZERO), a);
                assert_eq!(k.mul(a, Fe::ONE), a);
                assert_eq!(k.add(a, k.neg(a)), Fe::ZERO);
                if !a.is_zero() {
                    let ai = k.inv(a).unwrap();
                    assert_eq!(k.mul(a, ai), Fe::ONE);
                    assert_eq!(k.inv(ai).unwrap(), a);
                    // Fermat
                    assert_eq!(k.pow(a, p as u64 - 1), Fe::ONE);
                }
                for &b in &els {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    assert_eq!(k.add(a, b).0 as u32, (a.0 as u32 + b.0 as u32) % p);
                    for &c in &els {
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(f(3).factorial(0), Fe(1));
        assert_eq!(f(3).factorial(2), Fe(2));
        assert_eq!(f(5).factorial(4), Fe(4)); // Wilson
        assert_eq!(f(7).factorial(6), Fe(6));
    }
}
