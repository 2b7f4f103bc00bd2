//! Parsing, rendering and verification suites shared by the `qsh` binary.

pub mod commands;
pub mod parse;
pub mod render;
pub mod suites;

pub use render::Format;
pub use suites::{run_suite, Case, Outcome, SuiteConfig, SuiteReport, SUITES};
