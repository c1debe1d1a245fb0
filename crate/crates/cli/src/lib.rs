//! Command-line front end for `tilecohom`: file formats, report shapes and
//! command dispatch. The binary is a thin wrapper around [`run`].

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, Command, Output};
