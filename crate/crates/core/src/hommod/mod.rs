//! Modules, bimodules and representations over Hom-algebras, and the
//! constructions that produce new modules from old.

pub mod axioms;
pub mod constructions;
pub mod module;
pub mod oop;

pub use axioms::{check_module_axioms, check_module_axioms_with, ModuleCheckOptions};
pub use constructions::{
    adjoint_postlie_module, bimodule_to_lie_module, commutator_algebra, direct_sum, regular_module, tensor_product,
    twist_0k, twist_beta, twist_beta_unchecked, twist_n0,
};
pub use module::{HomModule, ModuleKind};
pub use oop::check_oop;
