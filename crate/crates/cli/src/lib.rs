//! Library side of the `skewcodec` command-line tool.
//!
//! The thin binary in `main.rs` only parses global flags and dispatches;
//! everything else lives here so the acceptance suite can drive the same
//! code paths programmatically: the subcommand implementations
//! (`cmd_*`), the serializable report payloads, the built-in reproduction
//! manifests with their runner, and the coded worked-example targets.

pub mod cmd_code;
pub mod cmd_field;
pub mod cmd_reproduce;
pub mod cmd_search;
pub mod cmd_skew;
pub mod examples;
pub mod manifest;
pub mod report;
