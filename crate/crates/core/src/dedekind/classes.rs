use num::{BigInt, Integer, One, Zero};

use super::localization::{LocalizedRational, PrimeSet};
use super::module::{classify, ext_dim, FgZModule};
use super::DedekindError;
use crate::exactlin::{FieldMatrix, IntMatrix, Rationals};

/// The two descriptions of `M ∈ 𝒰_P^⊥`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Divisibility {
    /// `Ext¹(ℤ/p, M) = 0` for all `p ∈ P`.
    pub via_ext: bool,
    /// `M = pM` for all `p ∈ P`.
    pub via_multiplication: bool,
}

pub fn divisibility(m: &FgZModule, primes: &PrimeSet) -> Divisibility {
    let via_ext = primes.primes().iter().all(|&p| ext_dim(&FgZModule::cyclic(p as i64), m).is_zero());
    // M/pM is the cokernel of [A | p·I]
    let a = m.presentation();
    let via_multiplication = primes.primes().iter().all(|&p| {
        let g = a.rows();
        let scaled = IntMatrix::from_fn(g, g, |i, j| if i == j { BigInt::from(p) } else { BigInt::zero() });
        classify(&a.hstack(&scaled)).is_zero()
    });
    Divisibility { via_ext, via_multiplication }
}

pub fn is_divisible_by(m: &FgZModule, primes: &PrimeSet) -> bool {
    divisibility(m, primes).via_ext
}

/// The homomorphism `ℤ_P → M` with `1 ↦ base`, where `base` has finite
/// order `n` prime to every `p ∈ P` (or `P` is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedHom {
    target: FgZModule,
    base: Vec<BigInt>,
    order: Option<BigInt>,
    support: PrimeSet,
}

impl LocalizedHom {
    pub fn target(&self) -> &FgZModule {
        &self.target
    }

    pub fn base(&self) -> &[BigInt] {
        &self.base
    }

    /// `f(a/b) = a·b'·base` with `b·b' ≡ 1` modulo the order of `base`.
    pub fn eval(&self, x: &LocalizedRational) -> Result<Vec<BigInt>, DedekindError> {
        if x.support() != &self.support && !x.denominator().is_one() {
            return Err(DedekindError::NotInLocalization);
        }
        let scalar = match &self.order {
            None => {
                if !x.denominator().is_one() {
                    return Err(DedekindError::NotInLocalization);
                }
                x.numerator().clone()
            }
            Some(n) => {
                let inv = mod_inverse(x.denominator(), n).ok_or(DedekindError::NotInLocalization)?;
                x.numerator() * inv
            }
        };
        let raw: Vec<BigInt> = self.base.iter().map(|c| c * &scalar).collect();
        Ok(self.target.normalize(&raw))
    }
}

fn mod_inverse(b: &BigInt, n: &BigInt) -> Option<BigInt> {
    if n.is_one() {
        return Some(BigInt::zero());
    }
    let e = b.mod_floor(n).extended_gcd(n);
    e.gcd.is_one().then(|| e.x.mod_floor(n))
}

/// Extend `1 ↦ base` along `ℤ → ℤ_P`. Fails with the first prime that
/// does not act invertibly on the cyclic submodule generated by `base`.
pub fn envelope_extend(target: &FgZModule, base: &[BigInt], primes: &PrimeSet) -> Result<LocalizedHom, DedekindError> {
    if base.len() != target.generator_count() {
        return Err(DedekindError::InvalidElement);
    }
    let base = target.normalize(base);
    let order = target.element_order(&base);
    if let Some(&p) = primes.primes().first() {
        match &order {
            None => return Err(DedekindError::NotDivisible(p)),
            Some(n) => {
                if let Some(&q) = primes.primes().iter().find(|&&q| n.is_multiple_of(&BigInt::from(q))) {
                    return Err(DedekindError::NotDivisible(q));
                }
            }
        }
    }
    let order = if primes.is_empty() { None } else { order };
    Ok(LocalizedHom { target: target.clone(), base, order, support: primes.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialCheck {
    pub essential: bool,
    pub finite_quotient: bool,
    /// `[I : J]` when finite.
    pub index: Option<BigInt>,
}

fn ideal_generator(gens: &[i64]) -> BigInt {
    gens.iter().fold(BigInt::zero(), |acc, &g| acc.gcd(&BigInt::from(g)))
}

/// For ideals `J ⊆ I` of ℤ given by generators: whether `J` is essential
/// in `I`, and whether `I/J` is finite.
pub fn essential_iff_finite(i: &[i64], j: &[i64]) -> Result<EssentialCheck, DedekindError> {
    let a = ideal_generator(i);
    let b = ideal_generator(j);
    let contained = if a.is_zero() { b.is_zero() } else { b.is_multiple_of(&a) };
    if !contained {
        return Err(DedekindError::NotContained);
    }
    // every nonzero submodule of the ideal I meets J unless J = 0
    let essential = a.is_zero() || !b.is_zero();
    // I/J is cyclic, generated by a, with relation (b/a)·a = b
    let quotient = if a.is_zero() {
        FgZModule::zero()
    } else {
        classify(&IntMatrix::diagonal(1, 1, &[&b / &a]))
    };
    let finite_quotient = quotient.is_torsion();
    let index = finite_quotient.then(|| quotient.torsion_order());
    Ok(EssentialCheck { essential, finite_quotient, index })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first: usize,
    pub second: usize,
    /// `ℤ/p` lies in exactly one of the two classes.
    pub prime: u64,
    pub in_first: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingTable {
    pub subsets: Vec<PrimeSet>,
    pub witnesses: Vec<Witness>,
}

impl TiltingTable {
    /// Number of classes, when every pair was separated.
    pub fn distinct_classes(&self) -> Option<usize> {
        let n = self.subsets.len();
        (self.witnesses.len() == n * (n - 1) / 2).then_some(n)
    }
}

/// One tilting class per subset of the universe; every pair of subsets is
/// separated by some `ℤ/p`.
pub fn classify_tilting(universe: &PrimeSet) -> Result<TiltingTable, DedekindError> {
    if universe.len() > 6 {
        return Err(DedekindError::UniverseTooLarge(universe.len()));
    }
    let subsets = universe.subsets();
    let mut witnesses = Vec::new();
    for first in 0..subsets.len() {
        for second in first + 1..subsets.len() {
            for p in subsets[first].symmetric_difference(&subsets[second]) {
                let m = FgZModule::cyclic(p as i64);
                let a = is_divisible_by(&m, &subsets[first]);
                let b = is_divisible_by(&m, &subsets[second]);
                if a != b {
                    witnesses.push(Witness { first, second, prime: p, in_first: a });
                    break;
                }
            }
        }
    }
    Ok(TiltingTable { subsets, witnesses })
}

/// `(M ⊗ ℚ = 0, M has a presentation ℤ^a → ℤ^g with a = g = rank)`.
pub fn fp_torsion_is_u_torsion(m: &FgZModule) -> (bool, bool) {
    let a = m.presentation();
    let q = FieldMatrix::from_fn(Rationals, a.rows(), a.cols(), |i, j| num::BigRational::from_integer(a.get(i, j).clone()));
    let rank = q.rank();
    let torsion = a.rows() - rank == 0;
    let u_torsion = a.rows() == a.cols() && a.cols() == rank;
    (torsion, u_torsion)
}
