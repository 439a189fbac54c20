//! Exact enumerative combinatorics of simple marked mesh patterns
//! `MMP(a, b, c, d)` over 132-avoiding permutations.
//!
//! The crate computes the distribution polynomials of the `mmp` statistic
//! over `S_n(132)`, carries the statistic across three bijections (Dyck
//! paths, non-decreasing parking functions, decreasing binary trees), and
//! exposes the Catalan/Narayana triangle closed forms together with the
//! Tamari-order structure of the sets `S(n, k)`. Everything is exact integer
//! arithmetic; overflow is a detected error.

pub mod bijections;
pub mod distribution;
pub mod error;
pub mod perm;
pub mod tamari;
pub mod triangles;

pub use error::{Error, Result};
pub use perm::{MeshPattern, Permutation};
