//! Exact structure theory for finite-dimensional Hom-Jordan algebras.
//!
//! Everything is generic over a [`Field`]; [`Rational`] and the prime fields
//! [`Fp`] are provided.
pub mod algebra_core;
pub mod bimodule;
pub mod constructions;
pub mod error;
pub mod exactla;
pub mod field;
pub mod structure;

pub use algebra_core::{HomAlgebra, StructureTensor, Verdict, VerificationReport};
pub use bimodule::{BimoduleRep, JordanModuleRep};
pub use error::{Error, Result};
pub use exactla::{Matrix, Poly, SimilarityInvariant, Subspace};
pub use field::{Field, FieldDescriptor, Fp, Rational};
pub use structure::{SearchOptions, Semisimplicity, Simplicity};

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type QMatrix = Matrix<Rational>;
pub type QAlgebra = HomAlgebra<Rational>;
