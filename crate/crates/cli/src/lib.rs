//! Command-line front end for `tricurve-core`: argument parsing, JSON and
//! CSV serialization of results, and an SVG plotter for the real loci.

pub mod commands;
pub mod error;
pub mod payload;
pub mod plot;
pub mod text;

pub use error::CliError;
