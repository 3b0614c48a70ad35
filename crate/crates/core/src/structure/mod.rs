//! Ideals, derived series, radical, decompositions and simplicity.

mod ideals;
mod semisimple;
mod series;
mod simple;

pub use ideals::{
    brute_force_hom_ideals, embedding, ideal_closure, is_hom_ideal, is_jordan_ideal,
    jordan_ideal_closure, restrict_algebra, restrict_product, subspace_product,
};
pub use semisimple::{
    alpha_orbits, centroid, decompose_semisimple, radical, sort_ideals, sum_of, trace_form_gram,
    DecompositionResult, SearchOptions,
};
pub use series::{
    derived_series, is_solvable, solvability_transfer_check, DerivedSeries, SolvabilityTransfer,
};
pub use simple::{
    induced_algebra, is_semisimple, is_simple, HomDecomposition, Semisimplicity, Simplicity,
};
