//! Exact supercharacters, Kirillov functions and the characters ξ_λ of
//! algebra groups 1 + 𝔫 over finite fields, with the construction of
//! exotic irreducible characters of UT_n(q).

pub mod algebra;
pub mod chain;
pub mod characters;
pub mod cli;
pub mod duals;
pub mod error;
pub mod exotic;
pub mod scalars;

pub use error::{Error, Result};
