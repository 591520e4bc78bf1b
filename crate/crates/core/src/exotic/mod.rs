//! An explicit functional λ on 𝔲_{6r+1}(q) whose ξ_λ has irreducible
//! constituents of degree q^{5r²−2r} with values in Q(ζ_{pr}) outside
//! Q(ζ_r) when r is a power of p, and the checks that establish it.

pub mod kappa;
pub mod lambda;
pub mod quotient;
pub mod regions;
pub mod report;
pub mod technical;

pub use kappa::{analyse_kappa, kappa_analysis, KappaAnalysis, KappaReport};
pub use lambda::{build_lambda, build_lambda_in, build_lambda_prime, lambda_double_prime, sigma};
pub use quotient::{a_subalgebra, quotient, Quotient, QuotientReport};
pub use regions::{build_regions, RegionAtlas};
pub use report::{
    exotic_report, inflation_identities, exotic_shape, torus_orbit_check, torus_transitivity_check, ExoticReport,
    InflationReport, TorusReport,
};
pub use technical::{technical, verify_technical, Technical, TechnicalReport};
