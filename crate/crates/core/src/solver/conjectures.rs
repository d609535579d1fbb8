//! Batch checks of four open conjectures on cubic 3-edge-connected graphs.
//!
//! 1. Some strongly connected orientation has a deletable arc at every vertex.
//! 2. Two strongly connected orientations (not necessarily different) give
//!    every vertex two different incident arcs, the first deletable in the
//!    first orientation and the second in the second.
//! 3. Some strongly connected orientation has at least half of its arcs
//!    deletable.
//! 4. Hamiltonian graphs have Frank number 2.
//!
//! Conditions 1 to 3 only get easier for larger deletable sets, so each is
//! decided on the inclusion-maximal sets of a full scan.

use serde::Serialize;

use super::exact::minimum_cover;
use super::space::{OrientationSpace, ScanOptions};
use super::SolverError;
use crate::graph::{edge_connectivity, find_hamiltonian_cycle, write_graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureOutcome {
    /// Witness orientations as direction bits.
    Holds {
        witness: Vec<u64>,
    },
    Fails,
    Skipped {
        reason: String,
    },
}

impl ConjectureOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ConjectureOutcome::Holds { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, ConjectureOutcome::Fails)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphConjectures {
    pub graph6: String,
    pub results: Vec<(u8, ConjectureOutcome)>,
}

impl GraphConjectures {
    pub fn outcome(&self, conjecture: u8) -> Option<&ConjectureOutcome> {
        self.results
            .iter()
            .find(|(c, _)| *c == conjecture)
            .map(|(_, o)| o)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub graphs: Vec<GraphConjectures>,
}

impl ConjectureReport {
    /// Number of graphs on which `conjecture` was checked and held, failed, or was skipped.
    pub fn tally(&self, conjecture: u8) -> (usize, usize, usize) {
        let mut tally = (0, 0, 0);
        for outcome in self.graphs.iter().filter_map(|g| g.outcome(conjecture)) {
            match outcome {
                ConjectureOutcome::Holds { .. } => tally.0 += 1,
                ConjectureOutcome::Fails => tally.1 += 1,
                ConjectureOutcome::Skipped { .. } => tally.2 += 1,
            }
        }
        tally
    }

    pub fn any_failure(&self) -> bool {
        self.graphs
            .iter()
            .any(|g| g.results.iter().any(|(_, o)| o.fails()))
    }
}

pub fn check_conjectures(graphs: &[Graph], which: &[u8]) -> Result<ConjectureReport, SolverError> {
    let mut report = ConjectureReport { graphs: Vec::new() };
    for g in graphs {
        report.graphs.push(check_one(g, which)?);
    }
    Ok(report)
}

fn check_one(g: &Graph, which: &[u8]) -> Result<GraphConjectures, SolverError> {
    let mut entry = GraphConjectures {
        graph6: write_graph6(g),
        results: Vec::new(),
    };
    if !g.is_cubic() {
        for &c in which {
            entry.results.push((
                c,
                ConjectureOutcome::Skipped {
                    reason: "not cubic".into(),
                },
            ));
        }
        return Ok(entry);
    }
    let connectivity = edge_connectivity(g);
    if connectivity < 3 {
        return Err(SolverError::NotThreeEdgeConnected(connectivity));
    }
    let space = OrientationSpace::new(g)?;
    let summary = space.scan(&ScanOptions::default())?;
    let maximal = summary.maximal_sets();
    let incident: Vec<u64> = (0..g.n())
        .map(|v| g.incident_edges(v).iter().fold(0, |a, &e| a | 1 << e))
        .collect();

    for &c in which {
        let outcome = match c {
            1 => first_holding(&maximal, |s| incident.iter().all(|&at| s & at != 0)),
            2 => two_arcs_everywhere(&maximal, &incident),
            3 => first_holding(&maximal, |s| 2 * s.count_ones() as usize >= g.m()),
            4 => match find_hamiltonian_cycle(g) {
                None => ConjectureOutcome::Skipped {
                    reason: "not Hamiltonian".into(),
                },
                Some(_) => {
                    let sets: Vec<u64> = maximal.iter().map(|&(s, _)| s).collect();
                    match minimum_cover(&sets, space.full_mask(), 2) {
                        Some((_, chosen)) => ConjectureOutcome::Holds {
                            witness: chosen.iter().map(|&i| maximal[i].1).collect(),
                        },
                        None => ConjectureOutcome::Fails,
                    }
                }
            },
            other => ConjectureOutcome::Skipped {
                reason: format!("no conjecture {other}"),
            },
        };
        entry.results.push((c, outcome));
    }
    Ok(entry)
}

fn first_holding(maximal: &[(u64, u64)], test: impl Fn(u64) -> bool) -> ConjectureOutcome {
    match maximal.iter().find(|&&(s, _)| test(s)) {
        Some(&(_, bits)) => ConjectureOutcome::Holds {
            witness: vec![bits],
        },
        None => ConjectureOutcome::Fails,
    }
}

/// At every vertex both sets must meet the incident edges, and they must
/// not meet them in the same single edge.
fn pair_works(a: u64, b: u64, incident: &[u64]) -> bool {
    incident.iter().all(|&at| {
        let (x, y) = (a & at, b & at);
        x != 0 && y != 0 && !(x == y && x.count_ones() == 1)
    })
}

fn two_arcs_everywhere(maximal: &[(u64, u64)], incident: &[u64]) -> ConjectureOutcome {
    for (i, &(a, wa)) in maximal.iter().enumerate() {
        if !incident.iter().all(|&at| a & at != 0) {
            continue;
        }
        for &(b, wb) in &maximal[i..] {
            if pair_works(a, b, incident) {
                return ConjectureOutcome::Holds {
                    witness: vec![wa, wb],
                };
            }
        }
    }
    ConjectureOutcome::Fails
}
