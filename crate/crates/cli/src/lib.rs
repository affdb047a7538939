//! Command-line front end: expression parsing, the subcommands and their
//! JSON, CSV and text output.

pub mod bipoly;
pub mod commands;
pub mod error;
pub mod output;
pub mod parse;

pub use error::{CliError, CliResult};
pub use output::Format;
