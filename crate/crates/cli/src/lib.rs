//! File formats and the command-line frontend for `gallery-core`.

pub mod commands;
pub mod dot;
pub mod error;
pub mod formats;
pub mod object;

pub use commands::{run, Cli};
pub use error::CliError;
