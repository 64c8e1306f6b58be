//! Exact enumeration and classification of tilings of a convex polygon up
//! to flip equivalence.
//!
//! The crate enumerates non-crossing diagonal sets of a labeled `n`-gon,
//! organizes them by shape (tile sizes) and by maximal triangulated regions,
//! evaluates the closed-form alternating formula for the number of flip
//! classes of each shape, and verifies that formula — together with the
//! overcount tables, signed column sums, and Euler characteristics it rests
//! on — against brute-force search. Everything is exact integer arithmetic.
//!
//! Modules map onto the moving parts:
//!
//! * [`partition`] / [`counting`] — integer-partition calculus and counting
//!   primitives;
//! * [`tiling`] — tilings, shapes, triangulated regions, flips;
//! * [`census`] — shape/fiber censuses, flip classes, and the independent
//!   dynamic-programming count;
//! * [`identity`] — the closed-form expressions and their brute-force
//!   counterparts;
//! * [`atlas`] — the cell structure of the associahedron: f-vectors, Euler
//!   characteristic, symmetry orbits, vertex profiles, classification
//!   tables;
//! * [`verify`] — batch verification sweeps with structured reports;
//! * [`export`] — JSON/CSV/markdown serialization.

pub mod atlas;
pub mod census;
pub mod counting;
pub mod error;
pub mod export;
pub mod identity;
pub mod partition;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{partitions_of, union_fiber, Multipartition, Partition};
pub use tiling::{enumerate_tilings, Diagonal, Tiling};
