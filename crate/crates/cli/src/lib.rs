//! Command implementations behind the `chordpart` binary.

pub mod commands;
pub mod experiment;
pub mod report;
