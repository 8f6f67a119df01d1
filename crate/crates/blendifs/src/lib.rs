//! Command-line front end and file formats for `blendifs-core`.

pub mod cells;
pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod pgm;
pub mod report;

pub use cli::Cli;
pub use commands::{run, Outcome};
pub use error::{CliError, Result};
