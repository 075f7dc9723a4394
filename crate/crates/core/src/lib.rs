//! Exact root-system machinery for deciding when an irreducible homogeneous
//! vector bundle on a Picard-rank-one homogeneous variety `G/P` is
//! arithmetically Cohen-Macaulay (ACM).
//!
//! The crate is split along the lines of the computation:
//!
//! - [`rootsys`]: root data for every simple Dynkin type in explicit rational
//!   coordinates, pairings, reflections and Weyl-chamber classification.
//! - [`parabolic`]: the data of `G/P_k`, the value multiset `T` of a highest
//!   weight, its maximum `M`, and the combinatorial ACM criterion.
//! - [`bott`]: an independent Borel-Weil-Bott cohomology engine used as an
//!   oracle for the criterion.
//! - [`classify`]: bounded enumeration of initialized ACM bundles and the
//!   built-in reference classifications.
//!
//! All arithmetic is exact. Nothing in this crate touches floating point.

pub mod bott;
pub mod classify;
mod error;
pub mod fixtures;
mod linalg;
pub mod parabolic;
pub mod rootsys;
mod vector;

pub use error::{Error, Result};
pub use vector::{AmbientVector, Rational};
