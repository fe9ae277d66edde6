//! Generalized concatenated quantum codes.
//!
//! A GC code takes `N` copies of a nested chain of stabilizer codes and
//! selects, level by level, which cosets may appear together using classical
//! outer codes. This crate builds such codes, computes their parameters and
//! checks distance claims.

pub mod catalog;
pub mod classical;
pub mod distance;
pub mod error;
pub mod fp;
pub mod galois;
pub mod gc;
pub mod symplectic;

pub use error::{Error, Result};
