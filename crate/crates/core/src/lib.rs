#![cfg_attr(not(test), no_std)]
//! Exact combinatorics of central hyperplane arrangements over the rationals.
//!
//! The crate computes the intersection lattice of a central arrangement,
//! decides supersolvability and hypersolvability, and determines the graded
//! dimensions of the associated holonomy Lie algebra, all over
//! arbitrary-precision rational arithmetic. No floating point is used
//! anywhere: a single wrong rank decision would corrupt every structure
//! built on top of it.
//!
//! The crate is `no_std` (with `alloc`); file formats, JSON reports and the
//! command-line front end live in the companion `arr-cli` crate.

extern crate alloc;

pub mod arrangement;
pub mod freelie;
pub mod holonomy;
pub mod hypersolvable;
pub mod lattice;
pub mod linalg;
pub mod rng;

// re-exported because BigInt and BigRational appear in public signatures
pub use num_bigint;
pub use num_rational;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

pub use arrangement::{parse_arrangement, Arrangement, Hyperplane, IndexSet};
pub use lattice::IntersectionLattice;
