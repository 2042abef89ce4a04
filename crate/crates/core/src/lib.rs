//! Decide whether the Galois deformation problem attached to a modular
//! eigenform passes an unobstructedness battery.
//!
//! The pipeline runs in four layers:
//!
//! - [`ffkernel`] — exact arithmetic over prime fields and their finite
//!   extensions, with univariate polynomial factorization and root finding;
//! - [`numfield`] — Hecke fields `K = Q(a_n)`, primes `λ` of `K` over a
//!   rational prime `ℓ`, and the reduction map into the residue field `k_λ`;
//! - [`modform`] — newform records, Sturm bounds, and congruence-prime
//!   detection between eigenforms;
//! - [`obstruct`] — the ten-condition battery, the admissible-level
//!   enumerator for non-optimal levels, obstruction witnesses, and the
//!   resulting `H²` lower bound.
//!
//! All values are immutable after construction and all operations are pure;
//! randomized polynomial splitting takes its generator state as an explicit
//! parameter so runs are reproducible from a seed.

pub mod arith;
pub mod ffkernel;
pub mod modform;
pub mod numfield;
pub mod obstruct;
pub mod serde_int;
