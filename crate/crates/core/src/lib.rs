//! Exact computations around the weighted projective line of weight type
//! (2,3,p): the rank-one group, hom spaces between line bundles, the
//! Grothendieck group, Cartan and Coxeter data of the associated finite
//! dimensional algebras, the Frobenius category of graded invariant
//! subspaces, and translation quivers of vector bundles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebras;
pub mod arquiver;
pub mod checks;
pub mod error;
pub mod grothendieck;
pub mod homspaces;
pub mod ladder;
pub mod lgroup;
pub mod linalg;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use lgroup::{LElt, WeightTriple};
pub use linalg::{IntMatrix, Matrix, QMatrix, Q};
