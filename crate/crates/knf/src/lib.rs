//! Finite-field k-normality toolkit: classify elements of F_{q^n} by three
//! independent k-normality tests, brute-force-verify the affine and trace
//! characterizations of 1-normal elements, settle primitive-1-normal
//! existence questions by exhaustive search, and build recursive chains of
//! N1-polynomials over F_{2^m}.

pub mod cli;
pub mod construct;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod knormal;
pub mod num;
pub mod parallel;
pub mod poly;
pub mod serialize;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{Element, Field};
pub use poly::Poly;

/// Run-wide tunables. Identical config and inputs give byte-identical
/// outputs.
#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub census_bound: u128,
    pub factor_bound: u64,
    pub verify_cap: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            seed: 0,
            census_bound: 1 << 20,
            factor_bound: 1 << 62,
            verify_cap: 64,
        }
    }
}

/// F_{p^m} with the lexicographically-least irreducible modulus (or F_p
/// itself when m = 1).
pub fn tower_base(p: u64, m: usize, _seed: u64) -> Result<Field> {
    let prime = Field::prime(p)?;
    if m == 1 {
        return Ok(prime);
    }
    let modulus = poly::find_irreducible(&prime, m, poly::Policy::Lexicographic);
    Field::extension(&prime, &modulus)
}

/// Degree-n extension of `base` with the lexicographically-least modulus.
pub fn extend(base: &Field, n: usize, _seed: u64) -> Result<Field> {
    let modulus = poly::find_irreducible(base, n, poly::Policy::Lexicographic);
    Field::extension(base, &modulus)
}

/// F_{q^n} over F_q = F_{p^m}, both levels with canonical moduli.
pub fn tower(p: u64, m: usize, n: usize, seed: u64) -> Result<Field> {
    let base = tower_base(p, m, seed)?;
    extend(&base, n, seed)
}
