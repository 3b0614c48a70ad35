//! Hom-algebras given by structure constants, and verifiers for their defining identities.

mod hom_algebra;
mod tensor;
mod verify;

pub use hom_algebra::HomAlgebra;
pub use tensor::StructureTensor;
pub use verify::{
    check_commutative, check_hom_isomorphism_via_induced, check_hom_jordan, check_homomorphism,
    check_identity, check_isomorphism, check_jordan, check_multiplicative, commutativity_verdict,
    Check, CheckOptions, Identity, Outcome, Strategy, Verdict, VerificationReport, Witness,
};
