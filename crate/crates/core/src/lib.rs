//! Frank numbers of 3-edge-connected graphs.
//!
//! An edge of a strongly connected orientation is *deletable* when the
//! orientation stays strongly connected without it. The Frank number of a
//! 3-edge-connected graph is the least `k` such that `k` strongly connected
//! orientations make every edge deletable at least once. This crate computes
//! Frank numbers exactly by exhausting the orientation space, searches for
//! certificates on larger graphs, builds certificates constructively for
//! several graph families, and transforms graphs (and certificates) under
//! truncation, local cubic modification and triangle contraction.

pub mod certificate;
pub mod cli;
pub mod constructions;
pub mod fixtures;
pub mod graph;
pub mod orientation;
pub mod solver;
pub mod transforms;
