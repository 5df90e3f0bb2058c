//! Grid files, report structs and the command layer behind the CLI.

pub mod commands;
pub mod gridfile;
pub mod report;

pub use gridfile::{GridFile, GridFileError};
pub use report::{Body, Report, SCHEMA_VERSION};
