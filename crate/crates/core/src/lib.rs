//! Exact computer algebra for classical r-matrices of sl(4,C) ≅ o(4,2;C).
//!
//! Everything is computed over Q(i) with polynomial coefficients in a fixed
//! set of formal parameters; there is no floating point anywhere.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod frobenius;
pub mod lie;
pub mod morphisms;
pub mod verify;
pub mod wedge;

pub use error::{Error, Result};
