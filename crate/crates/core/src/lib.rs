//! Spectral radii and limit points of graph matrices.
//!
//! This crate is `no_std` (it needs `alloc`). It covers:
//!
//! - graph types and named families ([`graph`]),
//! - the matrix models A, L, Q, A_α, signed, Hermitian and skew, plus the
//!   switching transformations ([`matrix`]),
//! - a dense symmetric eigensolver and spectral radii ([`spectra`]),
//! - the A_α characteristic-polynomial recurrences and closed forms ([`charpoly`]),
//! - limit points computed by root finding ([`limits`]),
//! - structural and spectral classification against the known lists ([`classify`]),
//! - adjacency tensors of uniform hypergraphs ([`hypergraph`]),
//! - exhaustive small-graph enumeration and theorem sweeps ([`oracle`]).
//!
//! File formats, JSON reports and the command-line tool live in the `speclim`
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charpoly;
pub mod classify;
mod error;
pub mod graph;
pub mod hypergraph;
pub mod limits;
pub mod math;
pub mod matrix;
pub mod oracle;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph, MixedGraph, OrientedGraph, Sign, SignedGraph};
pub use matrix::{DenseMatrix, Symmetry};
pub use spectra::{Model, Spectrum};
