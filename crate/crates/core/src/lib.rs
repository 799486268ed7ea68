//! Localized weight functionals for generalized Turán problems.
//!
//! Graphs on at most 64 vertices are stored as bit-set adjacency rows. The
//! crate enumerates cliques and pattern copies, evaluates the size functions
//! `alpha`, `beta`, `theta`, `gamma` and the weight functionals built from
//! them, and checks the localized inequalities and their equality cases with
//! exact rational arithmetic.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;
#[cfg(all(feature = "std", not(test)))]
extern crate std;

/// Largest supported number of vertices.
pub const MAX_VERTICES: usize = 64;

pub mod bitset;
pub mod canon;
pub mod cliques;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod pattern;
pub mod rational;
pub mod real;
pub mod size;
pub mod turan;
pub mod verify;
pub mod weights;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::{PatternGraph, SubgraphCopy};
pub use rational::ExactRational;
pub use real::{RealValue, SurdSum};
