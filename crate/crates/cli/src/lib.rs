//! Documents, commands and the certification harness behind the `homcert`
//! binary.

pub mod commands;
pub mod derive;
pub mod document;
pub mod error;
pub mod render;
pub mod suite;

pub use error::{CliError, CliResult, Exit};
