//! Twists, induced algebras, quotients, splittings, the example families and
//! classification signatures.
mod classify;
pub mod fixtures;
mod quotient;
mod twist;

pub use classify::{
    classification_signature, compare_signatures, iso_search_smallfield, lift_ideal_isomorphism,
    ClassificationSignature, SignatureComparison,
};
pub use fixtures::{
    cyclic_shift, family_cyclic, family_dim1, family_dim2, fixture_example_4_4,
    special_jordan_from_associative,
};
pub use quotient::{
    check_projection, complement_change, coset_coordinates, projection_fixture, quotient_algebra,
    quotient_projection, quotient_with_complement, split_idempotent_alpha, standard_complement,
    SplitResult,
};
pub use twist::{direct_sum, induced_jordan, yau_twist};
