//! Exact arithmetic over prime fields `F_ℓ` and their finite extensions
//! `F_{ℓ^d}`, including univariate polynomial factorization and root finding.
//!
//! Everything here is deterministic given the caller-supplied random state:
//! the equal-degree splitter is the only randomized step and it takes its
//! generator as an explicit parameter.

mod factor;
mod fp;
mod fq;
mod fqpoly;

pub use factor::{factor_fp_poly, factor_mod_p, is_irreducible};
pub use fp::FpPoly;
pub use fq::{fq_make, frobenius, FqElement, ResidueField};
pub use fqpoly::{fq_roots, FqPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    /// The stated modulus fails the deterministic primality check.
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    /// A defining polynomial factors nontrivially over its prime field.
    #[error("polynomial is reducible over F_{0}")]
    Reducible(u64),
}
