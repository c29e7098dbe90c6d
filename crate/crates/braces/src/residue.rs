//! Exact arithmetic in Z/(p^n).
//!
//! Everything downstream (polynomials, matrices, the brace construction)
//! works over these rings. Values are kept reduced at all times, and the
//! modulus is capped below 2^31 so that any product of two residues fits
//! comfortably in 64 bits.

use crate::error::{BraceError, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest allowed modulus value (exclusive). With p^n < 2^31 every product
/// of two reduced residues stays below 2^62.
pub const MODULUS_CAP: u64 = 1 << 31;

/// A prime-power modulus p^n with the value cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    prime: u64,
    exponent: u32,
    value: u64,
}

impl Modulus {
    /// Builds p^n, checking primality of `p` by trial division and rejecting
    /// moduli at or above [`MODULUS_CAP`].
    pub fn new(prime: u64, exponent: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(BraceError::InvalidParams(format!("{prime} is not prime")));
        }
        if exponent == 0 {
            return Err(BraceError::InvalidParams("exponent must be >= 1".into()));
        }
        let mut value: u64 = 1;
        for _ in 0..exponent {
            value = value
                .checked_mul(prime)
                .filter(|&v| v < MODULUS_CAP)
                .ok_or_else(|| BraceError::InvalidParams(format!(
                    "modulus {prime}^{exponent} exceeds the machine-width cap 2^31"
                )))?;
        }
        Ok(Modulus { prime, exponent, value })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The ring size p^n.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn residue(&self, value: u64) -> Residue {
        Residue { value: value % self.value, modulus: *self }
    }

    pub fn residue_i64(&self, value: i64) -> Residue {
        let m = self.value as i64;
        self.residue(value.rem_euclid(m) as u64)
    }

    pub fn zero(&self) -> Residue {
        self.residue(0)
    }

    pub fn one(&self) -> Residue {
        self.residue(1)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/({}^{})", self.prime, self.exponent)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/({})", self.value)
    }
}

/// An element of Z/(p^n), always reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// A residue is a unit exactly when it is coprime to p.
    pub fn is_unit(&self) -> bool {
        self.value % self.modulus.prime != 0
    }

    pub fn pow(&self, mut exp: u64) -> Residue {
        let m = self.modulus.value;
        let mut base = self.value;
        let mut acc: u64 = 1 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        self.modulus.residue(acc)
    }

    /// Multiplicative inverse by extended Euclid; errors on non-units.
    pub fn inverse(&self) -> Result<Residue> {
        let m = self.modulus.value;
        let (g, x, _) = ext_gcd(self.value as i64, m as i64);
        if g != 1 {
            return Err(BraceError::NotAUnit(self.value, m));
        }
        Ok(self.modulus.residue_i64(x))
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.modulus.residue(self.value + rhs.value)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let m = self.modulus.value;
        self.modulus.residue(self.value + m - rhs.value)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.modulus.residue(self.value * rhs.value)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let m = self.modulus.value;
        self.modulus.residue(m - self.value)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.value)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Trial-division primality check; inputs here are small by construction.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn modulus_rejects_composites_and_oversize() {
        assert!(Modulus::new(6, 1).is_err());
        assert!(Modulus::new(1, 1).is_err());
        assert!(Modulus::new(2, 0).is_err());
        assert!(Modulus::new(2, 31).is_err());
        assert!(Modulus::new(2, 30).is_ok());
    }

    #[test]
    fn inverse_of_unit_round_trips() {
        let m = Modulus::new(3, 2).unwrap(); // Z/9
        for v in 1..9 {
            let r = m.residue(v);
            if r.is_unit() {
                assert_eq!((r * r.inverse().unwrap()).value(), 1);
            } else {
                assert!(r.inverse().is_err());
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let m = Modulus::new(5, 2).unwrap();
        let r = m.residue(7);
        let mut acc = m.one();
        for e in 0..12 {
            assert_eq!(r.pow(e), acc);
            acc = acc * r;
        }
    }

    proptest! {
        #[test]
        fn ring_laws(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
                     n in 1u32..4,
                     a in 0u64..5000, b in 0u64..5000, c in 0u64..5000) {
            let m = Modulus::new(p, n).unwrap();
            let (a, b, c) = (m.residue(a), m.residue(b), m.residue(c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + (-a), m.zero());
            prop_assert_eq!(a * m.one(), a);
            prop_assert_eq!(a - b, a + (-b));
        }
    }
}
