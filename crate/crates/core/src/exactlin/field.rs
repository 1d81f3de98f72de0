//! Exact scalar fields: prime fields `F_p` and the rationals.

use std::fmt;
use std::hash::Hash;

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;

use super::poly::{self, Poly};

/// An exact field whose elements are plain values and whose operations
/// need a (cheap, cloneable) context, e.g. the modulus of a prime field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    fn characteristic(&self) -> u64;

    /// All elements, only for finite fields. Zero comes first.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// A random element. Over the rationals this draws small integers.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Parse a decimal literal (`-3`, and `2/7` for the rationals).
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;

    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Find an irreducible factor `f` of the monic polynomial `mu` such that
    /// `mu` is *not* a power of `f`. Returns `Ok(None)` when `mu` is primary
    /// (a power of one irreducible), and `Err` when the field cannot decide
    /// because `mu` has irreducible factors of degree > 1 it cannot split.
    fn primary_split(&self, mu: &Poly<Self>) -> Result<Option<Poly<Self>>, NonSplit>;

    fn name(&self) -> String;
}

/// The field cannot separate a polynomial into coprime factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSplit;

/// Prime field `F_p` with canonical representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not a prime below 2^31")]
pub struct NotPrime(pub u64);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn parse_elem(&self, s: &str) -> Option<u64> {
        s.trim().parse::<i64>().ok().map(|n| self.from_i64(n))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn primary_split(&self, mu: &Poly<Self>) -> Result<Option<Poly<Self>>, NonSplit> {
        Ok(poly::finite_field_primary_split(self, mu))
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
}

/// The rational numbers, as arbitrary-precision reduced fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }
    fn parse_elem(&self, s: &str) -> Option<BigRational> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    None
                } else {
                    Some(BigRational::new(n, d))
                }
            }
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn primary_split(&self, mu: &Poly<Self>) -> Result<Option<Poly<Self>>, NonSplit> {
        poly::rational_primary_split(mu)
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(&2), Some(4));
        assert_eq!(f.inv(&0), None);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(9), Err(NotPrime(9)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn parses_literals() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse_elem("-1"), Some(4));
        let q = Rationals;
        assert_eq!(q.parse_elem("2/4"), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(q.parse_elem("1/0"), None);
    }
}
