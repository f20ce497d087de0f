//! Library side of the `cartier` command-line tool: argument parsing
//! helpers, report types, and the command implementations. The binary
//! in `main.rs` is a thin clap wrapper around [`commands`].

#![allow(clippy::manual_div_ceil)]

pub mod commands;
pub mod parse;
pub mod report;
