//! Regular sampling and stable reconstruction in multiply generated
//! U-invariant subspaces over finite abelian groups.
//!
//! The crate builds sample-acquisition convolution systems from unitary
//! group representations, certifies recoverability through frame-theoretic
//! spectral criteria on the transfer field, designs reconstruction filters
//! (Moore-Penrose and the general left-inverse family), and performs exact
//! round-trip reconstruction — including decimated (subgroup) sampling and
//! crystallographic reductions to a multiply generated abelian problem.
//!
//! Start with [`group::GroupSpec`] for the underlying finite abelian group,
//! build a Hilbert-space model in [`models`], derive the sampling system,
//! and drive the workflow in [`sampling`]. The `examples/` directory holds
//! one runnable walkthrough per capability.

pub mod convops;
pub mod error;
pub mod frames;
pub mod group;
pub mod linalg;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
