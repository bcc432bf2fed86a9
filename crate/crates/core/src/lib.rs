//! Integral circle packings of octahedral, cubic, square-grid and triangular-grid type.

pub mod arith;
pub mod checks;
pub mod error;
pub mod geometry;
pub mod enumeration;
pub mod invariants;
pub mod reporting;

pub use error::{Error, Result};
pub mod kernel;
