//! Analysis of hyperbolic and weakly hyperbolic matrix polynomials.
//!
//! A monic matrix polynomial `L(z) = Σ L_j z^j` with `n×n` complex
//! coefficients is *hyperbolic* when every scalar section `⟨L(z)x, x⟩`
//! (`x ≠ 0`) has all-real roots, and *weakly hyperbolic* when `det L(z)`
//! has `nℓ` real roots counted with multiplicity. This crate provides:
//!
//! - polynomial and dense matrix value types with companion-matrix
//!   linearization, determinant polynomials and from-scratch eigensolvers
//!   ([`poly`], [`matrix`], [`eig`]);
//! - hyperbolicity and weak-hyperbolicity tests, the affine-pencil
//!   condition on two polynomials, directional determinant polynomials and
//!   root/eigenvalue coincidence checks ([`hyperbolicity`]);
//! - the four equivalent interlacing criteria for scalar monic pairs,
//!   residue decompositions, and the constructive rank-one symmetric pair
//!   ([`interlacing`]);
//! - two semidefinite feasibility programs for simultaneous
//!   symmetrization, with verified certificates ([`sdp`]);
//! - spectral zones of hyperbolic polynomials and the convex-combination
//!   criterion ([`zones`]);
//! - Horn triples and eigenvalue-sum inequalities for roots of determinant
//!   polynomials ([`horn`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); all operations are
//! pure functions over immutable values and safe for concurrent use.
//! Randomized checks take explicit seeds and are deterministic.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod defaults;
pub mod eig;
mod error;
pub mod horn;
pub mod hyperbolicity;
pub mod interlacing;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod sdp;
pub mod spectrum;
pub mod zones;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, SymmetricMatrix};
pub use poly::{MatrixPolynomial, ScalarPolynomial};
pub use spectrum::{RootClassification, SpectrumComplex, SpectrumReal};

/// Complex scalar type used throughout the crate.
pub type C64 = num_complex::Complex64;
