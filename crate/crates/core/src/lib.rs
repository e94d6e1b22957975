//! Invariant quadratic forms on irreducible modules of simple algebraic groups.
//!
//! The crate decides, for an irreducible module `L(λ)` of a simple group over an
//! algebraically closed field, whether the module carries a non-degenerate
//! invariant quadratic form. In odd characteristic this reduces to a parity
//! computation on the root datum; in characteristic 2 it is settled by a
//! collection of closed-form criteria, backed by explicit lattice computations
//! in exterior powers that serve as an independent oracle.
//!
//! Modules:
//! - [`rootsys`]: root data, duality, and the parity invariant `d(λ)`.
//! - [`arith`]: base-`p` digit containment and binomial valuations.
//! - [`classify`]: the closed-form classifier.
//! - [`repdata`]: composition factors, branching, and irreducible dimensions.
//! - [`chevlab`]: integral lattices in exterior powers and the two form oracles.

pub mod arith;
pub mod chevlab;
pub mod classify;
mod error;
pub mod gf2;
pub mod repdata;
pub mod rootsys;

pub use error::{Error, Result};
