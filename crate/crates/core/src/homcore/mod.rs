//! Hom-algebras given by structure constants, and exact certification of
//! their defining identities.

pub mod algebra;
pub mod axioms;
pub mod bialgebra;
pub mod cert;
pub mod maps;

pub use algebra::{HomAlgebra, Kind, BRACKET, LEFT, MUL, RIGHT, TLEFT, TRIGHT};
pub use axioms::{check_axioms, check_predicate, hom_associator, is_multiplicative, Predicate};
pub use bialgebra::{convolution_rb, find_epsilon_bialgebras, EpsilonHomBialgebra};
pub use cert::{certify, AxiomResult, CertReport, Certified, Identity, Provenance, Witness};
pub use maps::{check_morphism, check_rota_baxter, yau_twist, RotaBaxterReport};
