//! Finitely generated modules over the integers: classification by Smith
//! normal form, Hom/Ext/Tor, localizations at sets of primes, divisible
//! classes and the tilting classes they define.

mod classes;
mod localization;
mod module;
mod resolution;

use thiserror::Error;

pub use classes::{
    classify_tilting, divisibility, envelope_extend, essential_iff_finite, fp_torsion_is_u_torsion, is_divisible_by,
    Divisibility, EssentialCheck, LocalizedHom, TiltingTable, Witness,
};
pub use localization::{prime_support, universal_localization_eq, u_set_of_ore, LocalizedRational, OreSet, PrimeSet};
pub use module::{classify, ext_dim, hom_dim, tor_dim, FgZModule};
pub use resolution::{ext_via_resolution, hom_via_resolution, tor_via_resolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DedekindError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Ore set generators must be nonzero")]
    ZeroGenerator,
    #[error("denominator has a prime outside the allowed support")]
    NotInLocalization,
    #[error("not divisible by {0}")]
    NotDivisible(u64),
    #[error("second ideal is not contained in the first")]
    NotContained,
    #[error("prime universe too large: {0} primes (at most 6)")]
    UniverseTooLarge(usize),
    #[error("element does not have the module's coordinate length")]
    InvalidElement,
}
