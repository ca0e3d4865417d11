//! Command-line front end: knot selection, subcommands, and the JSON report.

pub mod commands;
pub mod input;
pub mod report;
