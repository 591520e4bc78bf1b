//! Finite fields and cyclotomic numbers.

pub mod cyclo;
pub mod field;
pub mod poly;

pub use cyclo::{Cyclo, CycloRing};
pub use field::{is_prime, prime_power, Fe, Field, FieldElement};
