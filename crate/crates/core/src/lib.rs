//! Exact computation of the PBW star product on symmetric algebras of Lie
//! algebras.
//!
//! The product `B(x, y) = e⁻¹(e(x)·e(y))` transported from the enveloping
//! algebra through the symmetrization map `e` splits into homogeneous pieces
//! `B_p` of degree `-p`. This crate computes those pieces two ways:
//!
//! * [`bipart::b_p_formula`] evaluates a closed sum over special bipartitions
//!   whose factors are multilinear Campbell–Hausdorff coefficients
//!   ([`chw::w`]);
//! * [`assoc::b_p_oracle`] straightens products in the free associative
//!   algebra and inverts `e` directly.
//!
//! [`bidiff`] checks the reduction identities and the differential-operator
//! criterion for the `B_p`, and [`specialize`] pushes the free formula through
//! structure constants to get `⋆_t` on concrete finite-dimensional algebras.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod assoc;
pub mod bidiff;
pub mod bipart;
pub mod chw;
mod error;
pub mod freelie;
pub mod rational;
pub mod specialize;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
