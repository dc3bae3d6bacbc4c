//! Octonionic Möbius transformations.
//!
//! The crate is organized bottom-up:
//!
//! * [`octonion`]: the algebra itself (Cayley–Dickson product, conjugation,
//!   inner product, associator).
//! * [`minkowski`]: 2×2 octonionic Hermitian matrices as vectors in 10D
//!   Minkowski space, spinors and their null squares, stereographic projection.
//! * [`lorentz`]: finite Lorentz transformations `A ↦ MAM†`, nesting, and the
//!   well-definedness / compatibility predicates.
//! * [`moebius`]: `w ↦ (αw+β)(γw+δ)⁻¹` on the extended octonions and on OP¹.
//! * [`g2`]: candidate G2 automorphism forms, the `ababa = ba³b` criterion,
//!   nested forms and the conformal composition on R⁸.
//! * [`oracle`]: an independent table-driven evaluator used to cross-check
//!   everything above.
//!
//! [`verify`] and [`cli`] drive the property suites from the command line.

pub mod cli;
pub mod error;
pub mod expr;
pub mod extended;
pub mod g2;
pub mod lorentz;
pub mod minkowski;
pub mod moebius;
pub mod octonion;
pub mod oracle;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use extended::{Extended, ExtendedComplex, ExtendedOctonion};
pub use octonion::{BasisUnit, CayleyDicksonPair, ComplexDirection, Octonion, Quaternion};

/// Default absolute tolerance for identities on O(1) inputs.
pub const EPSILON: f64 = 1e-12;

/// Tolerance used by predicates that gate control flow.
pub const PREDICATE_EPSILON: f64 = 1e-10;

/// `tol` scaled up for inputs of magnitude larger than one.
#[inline]
pub(crate) fn scaled(tol: f64, magnitude: f64) -> f64 {
    tol * magnitude.max(1.0)
}
