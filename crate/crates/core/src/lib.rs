//! Tropical (max-plus) eigenvalue theory of weighted planar networks.
//!
//! A planar network is a directed graph drawn in a vertical strip with
//! straight, left-to-right edges. Weighting its edges by tropical numbers
//! and maximizing over families of vertex-disjoint paths produces
//! piecewise-linear "eigenvalues" that satisfy the same polyhedral
//! constraints as the eigenvalues of Hermitian matrices:
//!
//! * [`multipath`] computes the maxima `l_k` and `m^k_i` and assembles them
//!   into triangular [`Tableau`]s.
//! * [`hive`] checks the interlacing cone, the hive cone and the Horn
//!   inequalities, and decides Horn feasibility exactly.
//! * [`collections`] holds the canonical multipath families on the staircase
//!   network and inverts the tableau maps.
//! * [`recombine`] turns the exchange arguments behind the cone inequalities
//!   into weight-preserving algorithms.
//! * [`spectra`] cross-checks everything against real symmetric matrices.
//!
//! All combinatorial computations use exact rational arithmetic. The crate
//! is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod collections;
mod elimination;
pub mod error;
pub mod fixtures;
mod flow;
mod geometry;
pub mod hive;
pub mod multipath;
pub mod network;
pub mod recombine;
pub mod sample;
pub mod spectra;
pub mod tableau;
pub mod weight;
pub mod weighting;

pub use error::{Error, Result};
pub use multipath::{GammaDeltaPath, Multipath};
pub use network::{Edge, EdgeId, PlanarNetwork, Point, Vertex, VertexId};
pub use tableau::Tableau;
pub use weight::{Rational, TropicalWeight};
pub use weighting::Weighting;
