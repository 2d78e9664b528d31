//! Batch front end for the two-path linkage toolkit: a line-based document
//! format, Graphviz export, and the subcommand implementations behind the
//! `vital` binary.

pub mod commands;
pub mod dot;
pub mod format;
