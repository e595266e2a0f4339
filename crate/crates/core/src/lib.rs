//! Numerical laboratory for the harmonically weighted one-level density of
//! low-lying zeros in the family of holomorphic newforms of even weight `k`
//! and prime level `N`.
//!
//! The crate provides exact modular arithmetic (characters, Gauss and
//! Kloosterman sums), the special functions entering the explicit formula
//! (Bessel J, digamma, Hurwitz zeta), compactly supported test-function
//! pairs, the Petersson-averaged prime sums that assemble the one-level
//! density without any eigenvalue input, Dirichlet L-function evaluation
//! with certified zero counting, the Mellin transform linking the two, and
//! the admissible-support exponent calculus.
//!
//! Everything is plain `f64`/`Complex64` numerics with exact integer
//! arithmetic underneath; all operations are pure and safe to call from
//! concurrent workers.

pub mod arith;
pub mod bounds;
pub mod lfunc;
pub mod petersson;
pub mod primes;
pub mod quad;
pub mod special;
pub mod sum;
pub mod testfn;

pub use num_complex::Complex64;

/// Errors shared across the library. Every operation either returns a
/// finite certified value or one of these.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),
    #[error("modulus {0} is not supported here: {1}")]
    BadModulus(u64, &'static str),
    #[error("character is not primitive (conductor {conductor}, modulus {modulus})")]
    NotPrimitive { conductor: u64, modulus: u64 },
    #[error("evaluation at a pole: {0}")]
    Pole(&'static str),
    #[error("domain: {0}")]
    Domain(&'static str),
    #[error("support radius sigma={0} is not admissible (need 0 < sigma < {1})")]
    BadSigma(f64, f64),
    #[error("level {0} must be 1 or prime")]
    BadLevel(u64),
    #[error("weight k={0} needs level-1 cusp form data (dim S_k(1) > 0); enable the old-form correction")]
    NeedsLevelOneCorrection(u32),
    #[error("fixture is missing a_p for p={0}")]
    MissingPrime(u64),
    #[error("fixture row {row}: {reason}")]
    BadFixture { row: usize, reason: String },
    #[error("uncertified numerical step: {0}")]
    Uncertified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// e(x) = exp(2 pi i x) from a fraction reduced to [0,1).
///
/// Large-angle cancellation is avoided by reducing num mod den in exact
/// integer arithmetic before touching floating point.
pub fn unit_root(num: u64, den: u64) -> Complex64 {
    debug_assert!(den > 0);
    let frac = (num % den) as f64 / den as f64;
    Complex64::from_polar(1.0, std::f64::consts::TAU * frac)
}

/// e(x) for a real argument; the caller is responsible for any reduction.
pub fn unit_exp(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * x)
}
