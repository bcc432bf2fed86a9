//! Exact integers, rationals, quadratic scalars and Kronecker symbols.

pub mod int;
pub mod kronecker;
pub mod quadrat;

pub use int::{int_utils, IntInfo};
pub use kronecker::{kron, kronecker, reciprocity_sign};
pub use quadrat::{quadrat_arith, QuadOp, QuadRat};
