//! Exact computation of monotone Hurwitz numbers through four independent routes:
//! brute-force enumeration in the symmetric group, the monotone cut-and-join
//! recursion, topological recursion on a rational spectral curve, and the
//! quantum-curve wave function.

pub mod algebra;
pub mod error;
pub mod partition;
pub mod perm;
pub mod cutjoin;
pub mod spectral;
pub mod structure;
pub mod quantum;
pub mod reference;
pub mod verify;

/// Tag recorded alongside cached results; bump on any change to numeric representation.
pub const ENGINE_VERSION: &str = concat!("hurwitz-core-", env!("CARGO_PKG_VERSION"));
