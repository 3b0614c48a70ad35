//! Exact dense linear algebra over [`Field`](crate::field::Field) scalars.

pub mod enumerate;
mod matrix;
mod poly;
mod subspace;
pub mod vector;

pub use matrix::{Matrix, Rref};
pub use poly::{Poly, SimilarityInvariant};
pub use subspace::Subspace;
