//! Hall-basis machinery for free Lie algebras over ℚ, plus the truncated
//! integer power series used by lower-central-series bookkeeping.
//!
//! The Hall set convention is the classical one: a bracket `[u, v]` of basis
//! words is basic when `u > v` and, if `u = [a, b]`, additionally `b <= v`;
//! words are totally ordered by degree and then by recursive subtree order.
//! The convention is fixed but never leaks into results — everything exposed
//! downstream is a basis-independent dimension.

mod element;
mod hall;
mod rewrite;
mod series;

pub use element::{Expr, LieElement};
pub use hall::HallBasis;
pub use rewrite::{normal_form, Rewriter};
pub use series::{exponent_polynomial, lcs_product, moebius, witt_dimension, TruncatedSeries};

use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeLieError {
    /// A bracket expression exceeds the basis truncation degree.
    DegreeExceeded { degree: usize, max: usize },
    /// A sum mixes homogeneous components of different degrees.
    Inhomogeneous { left: usize, right: usize },
    /// A generator index is out of range.
    BadGenerator { index: usize, n: usize },
    /// An empty sum has no well-defined degree.
    EmptySum,
}

impl fmt::Display for FreeLieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeLieError::DegreeExceeded { degree, max } => {
                write!(f, "expression degree {degree} exceeds basis truncation {max}")
            }
            FreeLieError::Inhomogeneous { left, right } => {
                write!(f, "inhomogeneous sum of degrees {left} and {right}")
            }
            FreeLieError::BadGenerator { index, n } => {
                write!(f, "generator x{index} out of range for {n} generators")
            }
            FreeLieError::EmptySum => write!(f, "empty sum has no degree"),
        }
    }
}

impl core::error::Error for FreeLieError {}
