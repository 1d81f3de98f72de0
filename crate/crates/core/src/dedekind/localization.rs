use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::DedekindError;
use crate::exactlin::is_prime;

/// Distinct primes in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self, DedekindError> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(&p) = set.iter().find(|&&p| !is_prime(p)) {
            return Err(DedekindError::NotPrime(p));
        }
        Ok(Self { primes: set.into_iter().collect() })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// All subsets, ordered by bitmask over the sorted primes.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        (0u32..1 << self.primes.len())
            .map(|mask| PrimeSet {
                primes: self.primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect(),
            })
            .collect()
    }

    pub fn symmetric_difference(&self, other: &Self) -> Vec<u64> {
        let a: BTreeSet<u64> = self.primes.iter().copied().collect();
        let b: BTreeSet<u64> = other.primes.iter().copied().collect();
        a.symmetric_difference(&b).copied().collect()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Prime divisors of `n ≠ 0`, by trial division.
pub fn prime_support(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if n.is_multiple_of(&bp) {
            out.push(p);
            while n.is_multiple_of(&bp) {
                n /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

/// Generators of a multiplicative subset of the nonzero integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreSet {
    generators: Vec<i64>,
}

impl OreSet {
    pub fn new(generators: Vec<i64>) -> Result<Self, DedekindError> {
        if generators.contains(&0) {
            return Err(DedekindError::ZeroGenerator);
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }
}

/// The primes `p` with `ℤ/p` killed by some element of the set. For ℤ this
/// is the set of primes dividing some generator, since a prime divides a
/// product exactly when it divides a factor.
pub fn u_set_of_ore(s: &OreSet) -> PrimeSet {
    let primes = s.generators.iter().flat_map(|&g| prime_support(&BigInt::from(g)));
    PrimeSet::new(primes).expect("trial division yields primes")
}

/// A reduced fraction whose denominator only involves primes of `support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedRational {
    num: BigInt,
    den: BigInt,
    support: PrimeSet,
}

impl LocalizedRational {
    pub fn new(num: BigInt, den: BigInt, support: &PrimeSet) -> Result<Self, DedekindError> {
        if den.is_zero() {
            return Err(DedekindError::NotInLocalization);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if prime_support(&den).iter().any(|&p| !support.contains(p)) {
            return Err(DedekindError::NotInLocalization);
        }
        Ok(Self { num, den, support: support.clone() })
    }

    pub fn integer(n: BigInt, support: &PrimeSet) -> Self {
        Self { num: n, den: BigInt::one(), support: support.clone() }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn support(&self) -> &PrimeSet {
        &self.support
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.den + &other.num * &self.den, &self.den * &other.den, &self.support)
            .expect("sum stays in the localization")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den, &self.support).expect("product stays in the localization")
    }
}

/// Check that inverting the generators of `s` gives the same subring of ℚ
/// as inverting the primes of `u_set_of_ore(s)`: each `1/g` is a fraction
/// with denominator supported on those primes, and each `1/p` equals
/// `(g/p)·(1/g)` for a generator `g` divisible by `p`.
pub fn universal_localization_eq(s: &OreSet) -> bool {
    let support = u_set_of_ore(s);
    let forward = s
        .generators
        .iter()
        .all(|&g| LocalizedRational::new(BigInt::one(), BigInt::from(g), &support).is_ok());
    let ore_support = PrimeSet::new(s.generators.iter().flat_map(|&g| prime_support(&BigInt::from(g))))
        .expect("trial division yields primes");
    let backward = support.primes().iter().all(|&p| {
        let Some(&g) = s.generators.iter().find(|&&g| g % p as i64 == 0) else {
            return false;
        };
        let inv_g = LocalizedRational::new(BigInt::one(), BigInt::from(g), &ore_support).expect("generator is invertible");
        let cofactor = LocalizedRational::integer(BigInt::from(g / p as i64), &ore_support);
        let inv_p = LocalizedRational::new(BigInt::one(), BigInt::from(p), &ore_support).expect("p divides a generator");
        cofactor.mul(&inv_g) == inv_p
    });
    forward && backward
}
