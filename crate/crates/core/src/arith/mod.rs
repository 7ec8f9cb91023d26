//! Exact ground field Q(i), parameter registry and sparse polynomials.

pub mod linalg;
mod param;
mod poly;
mod scalar;

pub use param::{Param, NPARAMS};
pub use poly::{ConjRule, Monomial, MultiPoly};
pub use scalar::Scalar;
