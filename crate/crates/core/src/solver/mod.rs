//! Frank-number computation: exhaustive scans, class counts, exact covers,
//! randomized certificate search and the conjecture checks.

use thiserror::Error;

use crate::graph::AutomorphismError;

pub mod classes;
pub mod conjectures;
pub mod exact;
pub mod search;
pub mod space;

pub use classes::{orientation_classes, OrientationClass, OrientationClasses};
pub use conjectures::{check_conjectures, ConjectureOutcome, ConjectureReport, GraphConjectures};
pub use exact::{
    frank_number_exact, minimum_cover, solve, Budget, FrankValue, LowerBoundEvidence, Method,
    SolveReport, SolveStats,
};
pub use search::{cover_search, SearchOptions, SearchOutcome};
pub use space::{
    enumerate_sc_orientations, EnumerateOptions, OrientationSpace, ScanOptions, ScanSummary,
    MAX_SCAN_EDGES,
};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("orientation space of {edges} edges exceeds the limit of {limit}")]
    SpaceTooLarge { edges: usize, limit: usize },
    #[error(transparent)]
    TooLarge(#[from] AutomorphismError),
    #[error("graph is only {0}-edge-connected; Frank numbers need 3-edge-connectivity")]
    NotThreeEdgeConnected(usize),
    #[error("exact computation stopped early; best bounds {:?}", .0.frank_number)]
    Inconclusive(Box<SolveReport>),
}
