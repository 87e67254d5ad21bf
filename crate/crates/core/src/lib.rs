//! Etale cohomology of punctured arithmetic curves `Spec Z \ S` with
//! `Z/nZ` coefficients, and cup products `H^1 x H^1 -> H^2` computed from
//! idele class data.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: integer primitives (factorization, residue symbols, CRT).
//! * [`local`]: `Q_v^x / (Q_v^x)^n`, Hilbert symbols, local Hilbert 90.
//! * [`quadratic`]: quadratic fields, ideals, form class groups, units,
//!   norm equations and Hilbert 90 for ideals.
//! * [`idele`]: `C_S(Q)/n` and `C_S(Q)[n]` with discrete logarithms.
//! * [`cohomology`]: the groups `H^i(U, Z/n)`, torsors and their characters.
//! * [`cup`]: the descent computation of `y ⌣ z` and the reciprocity checks.

pub mod abelian;
pub mod arith;
pub mod cohomology;
pub mod cup;
pub mod error;
pub mod idele;
pub mod local;
pub mod quadratic;

pub use abelian::{FiniteAbelianGroup, Presentation};
pub use error::{Error, Result};

/// Exact rationals used for field coordinates and idele components.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;

/// Default seed for every randomized routine; the CLI can override it.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;
