//! Dual functionals, group actions on them, orbits and shapes.

pub mod functional;
pub mod orbit;
pub mod partition;

pub use functional::Functional;
pub use orbit::{orbit, power_exponent, OrbitKind};
pub use partition::{
    is_quasi_monomial, primitive_element, quasi_monomial_count_with_shape, quasi_monomials, shape,
    torus_act, torus_orbit, SetPartition,
};
