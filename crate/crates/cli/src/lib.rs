//! Library surface of the rpq command-line tool: command definitions,
//! JSON scheme documents, and output rendering. The binary in `main.rs` is
//! a thin wrapper so integration tests can drive the same code paths.

pub mod commands;
pub mod render;
pub mod schemefile;

pub use commands::{run, Cli};
