//! Exact toolkit for zero-dimensional monomial ideals: colengths, tangent
//! space dimensions of the Hilbert scheme of points, exponent convex hulls,
//! and exhaustive searches for maximal tangent dimension.

pub mod bareiss;
pub mod conjecture;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod hull;
pub mod monomial;
pub mod search;
pub mod staircase;
pub mod tangent;
pub mod text;

pub use error::{Error, Result};
pub use monomial::{minimalize, power_ideal, ExponentVector, MonomialIdeal};
pub use staircase::{colength, staircase, Staircase};
pub use text::{parse_ideal, render};
