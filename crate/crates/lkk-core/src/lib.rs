//! Exact computation of graded Bowen-Franks modules of weighted directed
//! graphs, and of the machinery around them: arbitrary-precision Smith
//! normal forms with transformation certificates, Laurent polynomial rings
//! ℤ[σ,σ⁻¹] and group rings ℤ[G], finitely presented modules with an
//! isomorphism-invariant battery, covering-graph truncation towers with an
//! independent colimit oracle, and a certificate-producing classifier for
//! pairs of graphs.
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! exact fractions, and no operation produces a floating-point number.
//! All values are immutable after construction and safe to share across
//! threads; the crate is `no_std` (with `alloc`) so the algorithmic core
//! stays free of platform dependencies. IO, file formats, and the `lkk`
//! command line live in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod bf;
pub mod classify;
pub mod cover;
pub mod enumerate;
pub mod field_laurent;
pub mod fp_module;
pub mod graph;
pub mod group;
pub mod int_mat;
pub mod laurent;
pub mod window;

pub use bf::{bf_dual, bf_graded, bf_ungraded, BfDual, BfGraded};
pub use classify::{classify_pair, ClassifyOptions, IsoCertificate, IsoVerdict};
pub use fp_module::{FpModule, InvariantBattery, ZeroVerdict};
pub use graph::{Edge, WeightedGraph};
pub use group::{Group, GroupElement};
pub use int_mat::{snf, AbelianInvariants, IntMatrix, SnfResult};
pub use laurent::{GroupRingElement, LaurentMatrix};
