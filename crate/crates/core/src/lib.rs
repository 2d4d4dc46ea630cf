//! Constructions and exact verification of edge-girth-regular graphs.
//!
//! An `egr(v, k, g, λ)` graph is `k`-regular of order `v` and girth `g`, with
//! every edge lying on exactly `λ` cycles of length `g`. This crate builds the
//! biaffine incidence graphs `B_q`, a 32-vertex quintic graph obtained from
//! `B_4` by adding a perfect matching, and the Suzuki coset graphs for
//! `q = 8`, and it checks their parameters by exact cycle census. The
//! [`bounds`] module provides the Moore bound and the lower bounds on the
//! order of an egr graph used to certify extremality.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, threading and
//! the command-line frontend live in the companion `egr` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod census;
pub mod constructions;
mod error;
pub mod field;
pub mod graph;
pub mod suzuki;
pub mod symmetry;

pub use census::{cycle_census, is_egr, EgrReport};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use graph::{Girth, Graph};
pub use symmetry::Perm;
