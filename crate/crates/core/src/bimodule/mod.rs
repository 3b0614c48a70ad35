//! Bimodules of Hom-Jordan algebras, modules of Jordan algebras, and the
//! transport between them.
mod check;
mod rep;
mod submodule;
mod transport;

pub use check::{check_bimodule, check_equivariance, check_jordan_module};
pub use rep::{
    rank_one_fixture, regular_bimodule, regular_module, scalar_line_module, zero_bimodule,
    BimoduleRep, JordanModuleRep,
};
pub use submodule::{
    invariant_closure, irreducibility_of, irreducibility_transfer_check, is_irreducible,
    is_irreducible_module, is_submodule, kernel_image_analysis, submodule_closure, Irreducibility,
    IrreducibilityTransfer, KernelImageAnalysis,
};
pub use transport::{bimodule_to_module, module_to_bimodule};

#[cfg(test)]
mod tests;
