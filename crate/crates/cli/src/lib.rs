//! Command-line front end for `revring`: text commands, seeded suites and
//! their JSON reports.

pub mod commands;
pub mod report;
pub mod suites;

pub use report::Report;
pub use suites::{run_suite, UnknownSuite, SUITES};
