//! Exact linear algebra over prime fields and the rationals, and Smith
//! normal form over the integers.

pub mod field;
pub mod intmat;
pub mod matrix;
pub mod poly;

pub use field::{is_prime, Field, NonSplit, NotPrime, PrimeField, Rationals};
pub use intmat::{integer_kernel, lattice_basis, snf, IntMatrix, Snf};
pub use matrix::{Echelon, FieldMatrix};
pub use poly::Poly;
