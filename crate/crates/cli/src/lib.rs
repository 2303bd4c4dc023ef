//! Command-line front end: argument validation, CSV and SVG writers, and
//! dispatch to the `openph-core` experiments.

pub mod args;
pub mod csv;
pub mod error;
pub mod run;
pub mod svg;

pub use args::{parse_args, Command, Format, RunConfig};
pub use error::{CliError, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE};
pub use run::{compute, execute, run, Output, Report};
