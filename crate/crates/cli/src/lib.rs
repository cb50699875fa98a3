//! File formats, commands, reports and DOT output for the `auslander` binary.

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;

pub use commands::{Common, IndecMethod, OrthoMode, Outcome, TripleArgs};
pub use report::RunReport;
