//! Exact certification of Hom-algebra structures and the constructions
//! between them.
//!
//! Every algebra is a finite family of structure-constant tensors over the
//! rationals together with a twisting map. Identities are multilinear, so
//! checking them on basis tuples with exact arithmetic is a proof.

pub mod error;
pub mod exactlin;
pub mod functors;
pub mod homcore;
pub mod hommod;
pub mod search;

pub use error::{Error, Result};
