use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {modulus:?} is not irreducible over F_{p}")]
    ReducibleModulus { p: u32, modulus: Vec<u32> },

    #[error("no built-in modulus for q = {0}; supply one")]
    NoBuiltinModulus(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} needs {needed} items, above the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u64,
    },

    #[error("ambient mismatch: {0}")]
    Mismatch(String),

    #[error("t = {t} is not coprime to the conductor {m}")]
    NotCoprime { t: i64, m: u32 },

    #[error("conductor {0} is not a prime power")]
    NotPrimePower(u32),

    #[error("functional is not quasi-monomial")]
    NotQuasiMonomial,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("function is not a homomorphism on the subgroup")]
    NotHomomorphism,

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 1,
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
