//! Exact modular arithmetic: factorization, multiplicative functions,
//! Dirichlet characters, Gauss sums, Kloosterman sums, and their identities.

pub mod character;
pub mod factor;
pub mod gauss;
pub mod kloosterman;

pub use character::{
    decompose_character, enumerate_characters, primitive_character_count, DirichletCharacter,
    UnitGroup,
};
pub use factor::{
    divisor_count, euler_phi, euler_phi_and_nu, factorize, gcd, is_prime, mod_inv, mod_pow,
    Factorization,
};
pub use gauss::{gauss_sum, GaussSum};
pub use kloosterman::{
    kloosterman, kloosterman_direct, weil_majorant, KloostermanTable, SplitKloosterman,
};
