//! Class functions, Kirillov functions, ξ_λ and abelian duals.

pub mod abelian;
pub mod kirillov;
pub mod table;

pub use abelian::{
    abelian_dual, field_of_values, field_of_values_linear, homomorphism_test, is_character_linear, witness_elements,
    AbelianDual, FieldOfValues, HomomorphismTest, LinearCharacter,
};
pub use kirillov::*;
pub use table::{conjugacy_classes, ClassFunction};
