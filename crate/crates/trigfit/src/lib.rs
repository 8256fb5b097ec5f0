//! IO companion to `trigfit-core`: CSV ingestion, JSON/CSV reports, and the
//! `trigfit` command-line tool.

pub mod cli;
pub mod report;
pub mod table;

pub use cli::{run, Cli, CliError};
