//! Combinatorics of the small Kazhdan–Lusztig cell of a Coxeter system.
//!
//! The small cell `J` of an indecomposable Coxeter system consists of the
//! non-identity elements with a unique reduced expression. This crate
//! enumerates it, decides when it is finite, and builds the quivers that
//! describe the cell 2-representations of the small quotient of Soergel
//! bimodules:
//!
//! * [`diagram`]: Coxeter–Dynkin diagrams, finiteness, splitting at the labeled edge.
//! * [`words`]: rigid words, cell tables, left multiplication, the path bijection.
//! * [`oracle`]: the braid-move (Tits) closure used to cross-check rigidity.
//! * [`zigzag`]: zig-zag categories of loop-free multigraphs and their Cartan data.
//! * [`cellrep`]: the tree `Λ^(s)` on a left cell and the action of the generators.
//! * [`theta`]: rooted unions, the ADE catalog and the graph `Θ`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod canon;
pub mod cellrep;
pub mod diagram;
mod error;
pub mod laurent;
pub mod matrix;
pub mod oracle;
pub mod theta;
pub mod words;
pub mod zigzag;

pub use diagram::{CoxeterDiagram, EdgeLabel, FinitenessVerdict, Generator};
pub use error::{Error, Result};
pub use laurent::Laurent;
pub use matrix::{IntMatrix, LaurentMatrix, Matrix};
pub use words::{RigidWord, Word};
pub use zigzag::{MultiGraph, ZigzagPresentation};
