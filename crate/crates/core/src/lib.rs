//! Exact computations in the η-inverted Witt theory of the classifying space
//! `BN`, where `N` is the normaliser of the diagonal torus in `SL₂`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: integer
//! coefficients are arbitrary precision and representation matrices are
//! rational.
//!
//! * [`gamma`]: Laurent polynomials in the Bott element γ.
//! * [`bn`]: the twist-graded, truncated ring generated by `e` and `ẽ`.
//! * [`multipoly`]: multivariate polynomials over γ-Laurent coefficients.
//! * [`rep`]: representations of `N` and their decomposition into irreducibles.
//! * [`ternary`]: the formal ternary law for triple tensor products.
//! * [`euler`]: Euler and Borel classes of the bundles `Õ±(m)`.
//! * [`classifying`]: power-series presentations for `BSL_n`, `BGL_n`.

#![no_std]

extern crate alloc;

pub mod bn;
pub mod classifying;
mod error;
pub mod euler;
pub mod gamma;
pub mod multipoly;
pub mod rep;
pub mod ternary;

pub use bn::{BnElement, Degree, Twist};
pub use error::{Error, Result};
pub use gamma::GammaScalar;
pub use multipoly::{MultiPoly, Variable};

/// Default truncation degree for power series in `e`.
pub const DEFAULT_CAP: u32 = 64;
