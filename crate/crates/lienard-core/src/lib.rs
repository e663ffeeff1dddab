//! Limit cycles of polynomial Liénard systems.
//!
//! This crate builds planar Liénard systems `ẋ = y − εF(x), ẏ = −g(x)` with
//! many limit cycles and verifies the cycle counts numerically. The toolkit
//! covers:
//!
//! * dense univariate polynomial arithmetic ([`poly`]),
//! * analysis of the level sets of `H(x,y) = ½y² + G(x)` ([`hamiltonian`]),
//! * Abelian integrals `I_j(h) = ∮ x^{2j+1} dy` and Melnikov functions
//!   `M(h) = ∮ F dy` by quadrature, with zero detection ([`abelian`]),
//! * the doubling/perturbation construction that turns a system with `k`
//!   cycles into systems with `2k+q` cycles ([`constructor`]),
//! * closed-form lower bounds on the maximal cycle count `H(n,m)` and their
//!   recursions ([`bounds`]),
//! * direct ODE verification through Poincaré return maps ([`verifier`]).
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `lienard-cli` crate.
//!
//! Orientation convention: all loop integrals are taken along the flow
//! direction of `ẋ = y, ẏ = −G′(x)`, which traces level orbits clockwise.
//! With this convention `I_j(h) < 0` on every orbit.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod bounds;
pub mod constructor;
pub mod error;
pub mod hamiltonian;
pub mod poly;
pub mod quad;
pub mod verifier;

pub use error::{Error, Result};
pub use poly::Polynomial;
