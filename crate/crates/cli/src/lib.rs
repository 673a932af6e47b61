//! Table I/O formats and report shapes for the `narylab` command-line tool.

pub mod document;
pub mod report;
