//! Constructions from one structure to another. Each output is certified
//! against its target axioms; nothing is trusted from the construction.

pub mod classical;
mod common;
pub mod ldend;
pub mod oop;

pub use classical::{adjoint_bimodule, commutator_lie, novikov_to_postlie, prelie_to_lie, rb_dendriform, scale};
pub use common::FunctorResult;
pub use ldend::{
    induced_product, ldend_brackets, ldend_from_prelie_module, ldend_semidirect, ldend_to_prelie, ldend_transpose,
    prelie_module_split, transpose_unchecked, BracketPair, PreLieMode, PreLieSplit,
};
pub use oop::{
    oop_assoc_to_dendriform, oop_assoc_to_ldendriform, oop_assoc_to_prelie, oop_lie_to_prelie,
    oop_prelie_to_dendriform, DualResult,
};
