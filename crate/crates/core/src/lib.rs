//! Invariant calculus for two-generator subgroups of SU(3,1).
//!
//! Complex hyperbolic 3-space is the projectivization of the negative cone of
//! C^{3,1}; its holomorphic isometries lift to SU(3,1). This crate implements
//! the coordinate calculus for pairs of loxodromic isometries:
//!
//! - the signature-(3,1) Hermitian form, vector classification, group
//!   certification and frame completion ([`hermitian`]);
//! - loxodromic normal forms `E(r,θ,φ)`, trace invariants `(τ,σ)` and the
//!   eigenvalue/eigenframe decomposition ([`isometry`]);
//! - Koranyi-Riemann cross-ratios, the cross-ratio variety, Cartan's angular
//!   invariant and the η/ν/ζ₀/α/β conjugacy invariants ([`invariants`]);
//! - non-singularity tests and reducibility detection ([`nonsingular`]);
//! - constructive inversion of the coordinate map: rebuilding a canonical
//!   pair from its 15 real Fenchel-Nielsen parameters ([`reconstruction`]);
//! - twist-bend elements and surface-group assembly by pants gluing
//!   ([`gluing`]);
//! - seeded random generation of all of the above ([`sampling`]).
//!
//! All values are immutable after construction and every operation is pure,
//! so the whole API is safe for concurrent use.

pub mod error;
pub mod gluing;
pub mod hermitian;
pub mod invariants;
pub mod isometry;
mod linalg;
pub mod nonsingular;
mod quartic;
pub mod reconstruction;
pub mod sampling;
pub mod wire;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type Cx = num_complex::Complex64;
/// Vector of C^{3,1} in the basis where the form matrix is `H`.
pub type CVec4 = nalgebra::Vector4<Cx>;
/// 4x4 complex matrix.
pub type CMat4 = nalgebra::Matrix4<Cx>;

/// Default relative tolerance for algebraic identities on unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Threshold below which a loxodromic decomposition refuses to build a frame
/// (`r - 1` smaller than this means near-parabolic conditioning).
pub const NEAR_PARABOLIC_GUARD: f64 = 1e-6;

/// Relative imaginary-part threshold deciding whether a cross-ratio counts as
/// real for the Cartan angle relations and for quadruple realization.
pub const REAL_CROSS_RATIO_THRESHOLD: f64 = 1e-6;

pub(crate) fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

pub(crate) fn one() -> Cx {
    Cx::new(1.0, 0.0)
}

pub(crate) fn zero() -> Cx {
    Cx::new(0.0, 0.0)
}
