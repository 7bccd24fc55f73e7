//! Searching for structures: Hom-post-Lie products on a Hom-Lie algebra,
//! small O-operators, and the seeded instance generators used by tests.

pub mod catalog;
pub mod oop;
pub mod postlie;
pub mod random;

pub use catalog::{affine_lie, catalog, unit_like, CatalogEntry};
pub use oop::{brute_force_oop_search, DEFAULT_OOP_BUDGET};
pub use postlie::{
    candidate_space, postlie_linear_system, postlie_search, PostLieCandidateSpace, PostLieSearch, DEFAULT_SEARCH_BUDGET,
};
pub use random::{random_instance, Generator, RandomInstanceSpec};
