//! Core algorithms for random walks on Cayley graphs of finite groups.
//!
//! The crate enumerates concrete finite group families (cyclic groups and
//! their products, dihedral groups, Coxeter types A/B/D/I2 and products),
//! builds their Cayley graphs with BFS length functions and reduced-word
//! witnesses, simulates doubly stochastic random walks, and evaluates the
//! exact limiting expectations of length-type functionals in big-rational
//! arithmetic. On top of that sit braid-word lifts with closure component
//! counts, and the large-deviations machinery for sums of block lengths
//! (restricted composition counts, rate function, exact log-probability
//! oracles).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `braidwalk` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod braid;
pub mod cayley;
pub mod error;
pub mod group;
pub mod ldp;
pub mod limits;
pub mod rng;
pub mod walk;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Default cap on the order of groups that may be enumerated.
pub const DEFAULT_ORDER_CAP: u64 = 10_000_000;

/// Default master seed for simulations: the high 64 bits of the fractional
/// part of sqrt(2), a fixed nothing-up-my-sleeve constant.
pub const DEFAULT_SEED: u64 = 0x6a09_e667_f3bc_c908;

/// Convenience constructor for a big rational from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
