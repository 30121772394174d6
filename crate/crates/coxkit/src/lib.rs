//! File formats, JSON and DOT export, and the `coxkit` command line for
//! [`coxkit_core`].
//!
//! * [`format`]: the `.cox` diagram and multigraph text formats, word syntax.
//! * [`json`]: serde documents for every command.
//! * [`dot`]: Graphviz output for diagrams, `Λ^(s)`, `Ω`, `Ω̃` and `Θ`.
//! * [`render`]: aligned text tables.
//! * [`parallel`]: cell enumeration on a rayon pool.
//! * [`cli`]: argument parsing and dispatch.

#![warn(missing_docs)]

pub mod cli;
pub mod dot;
pub mod format;
pub mod json;
pub mod parallel;
pub mod render;

pub use coxkit_core as core;
