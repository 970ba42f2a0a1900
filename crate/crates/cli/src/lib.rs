//! Command-line front end for `symprod-core`: manifold files, the bundled
//! catalog, and the `series`, `fock-verify`, `verify-all` and `catalog`
//! commands.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod manifest;
pub mod report;

pub use error::{exit, CliError, Result};
pub use report::Report;
