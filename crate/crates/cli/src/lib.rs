//! Scene/report I/O, subcommands and SVG rendering behind the `poristic`
//! binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod scene;
pub mod svg;

pub use error::{CliError, Exit};
pub use report::Report;
pub use scene::{Scene, ValidScene};
