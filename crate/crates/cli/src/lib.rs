//! Command-line front end for the arrangement library: file parsing, stable
//! JSON report schemas, and the `arr` binary's command implementations.

pub mod commands;
pub mod fileio;
pub mod reports;
pub mod textout;

pub use commands::{CliError, Options, Report};
