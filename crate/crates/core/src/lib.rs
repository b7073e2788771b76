//! Simplex tensor networks for geometrically frustrated spin lattices.
//!
//! Small entangled states ("simplices") are placed on the up-triangles of a
//! triangular lattice (or on the checked squares of a square network) and
//! glued together by copy tensors at every site. Contracting the network
//! yields a physical state on the sites: W-type simplices reproduce the
//! degenerate ground manifold of the triangular antiferromagnet, GHZ simplices
//! give ferromagnetic order.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is pure
//! computation; file formats, parallel drivers and the command line front end
//! live in the `simplexnet` crate.
//!
//! Modules:
//! - [`lattice`]: triangular patches, explicit lattices, the 24-site square network.
//! - [`simplex`]: W, W̄, GHZ, mixtures and the symmetric 4-qubit family.
//! - [`network`]: diagonal and pairwise contraction, plus streaming reduced densities.
//! - [`spectral`]: Hamiltonians, ground states, perturbation theory, entropies.
//! - [`frustration`]: classical ground manifolds and W-structure checks.
//! - [`exactcover`]: Exact Cover model counting by contraction and brute force.
//! - [`experiments`]: region entropies, amplitude classes, the 4-qubit scan and anisotropy.

#![no_std]
// `!(x > 0.0)` is used on purpose so that NaN fails positivity checks
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
mod error;
pub mod exactcover;
pub mod experiments;
pub mod frustration;
pub mod lattice;
pub mod network;
mod rng;
pub mod simplex;
pub mod spectral;

/// Crate version, recorded in experiment provenance headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use lattice::{LatticeGraph, LatticeKind, Region, SquareNetworkGraph};
pub use network::NetworkSpec;
pub use simplex::{SimplexState, SymmetricFourQubit};
pub use spectral::{HamiltonianSpec, PureState, ReducedDensity};
