//! Relativistic (Dirac-Coulomb) transition matrix elements of hydrogenic
//! atoms in the plane-wave representation, evaluated through closed-form
//! hypergeometric reductions, plus the second-order self-energy assembly
//! that consumes them: a single numerical principal-value integration over
//! the photon momentum magnitude with Pauli-Villars regularization and a
//! pluggable mass-renormalization subtraction.
//!
//! The crate is organized bottom-up:
//!
//! - [`numerics`]: complex gamma, confluent and Gauss hypergeometric
//!   functions, spherical Bessel, associated Legendre, Laguerre.
//! - [`angular`]: spherical harmonics, Gaunt integrals and the selection
//!   rules they impose.
//! - [`states`]: Dirac-Coulomb bound and continuum eigenstates with their
//!   power-exponential radial decompositions.
//! - [`radial`]: the Hankel-Laplace and Laplace-of-1F1 integration rules
//!   and the term-by-term assemblers built on them.
//! - [`matel`]: Fourier blocks, spinor coefficients, and the gauge
//!   quadruple of squared matrix elements.
//! - [`shift`]: principal-value k-integration, regularization, and the
//!   intermediate-state sum.
//! - [`oracle`]: an independent brute-force reference engine (extended
//!   precision series, adaptive quadrature) used by the test suites to
//!   arbitrate every analytic formula.
//!
//! Everything is `no_std`-compatible (with `alloc`); the companion CLI
//! crate carries IO, file formats, and parallel drivers.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod angular;
pub(crate) mod fmath;
pub mod matel;
pub mod numerics;
pub mod oracle;
pub mod radial;
pub mod shift;
pub mod states;

/// Complex double used across the crate.
pub type Complex = num_complex::Complex<f64>;
