//! The portable Frank-number certificate and its verifier.
//!
//! A certificate for `F(G) <= k` lists `k` orientations of `G` as arc lists
//! in canonical edge order, plus for every edge the index of an orientation
//! in which that edge is deletable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::orientation::{Orientation, OrientationError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    #[serde(rename = "claimed_frank_number")]
    pub claimed_k: usize,
    pub orientations: Vec<Vec<[usize; 2]>>,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("orientation {0} is not strongly connected")]
    NotStronglyConnected(usize),
    #[error("edge {0} is deletable in none of the orientations")]
    EdgeNotCovered(usize),
    #[error("certificate does not verify: {0}")]
    Invalid(VerifyFailure),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

impl Certificate {
    /// Builds a certificate from orientations, choosing for each edge the
    /// first orientation in which it is deletable.
    pub fn from_orientations(
        g: &Graph,
        orientations: &[Orientation<'_>],
    ) -> Result<Self, CertificateError> {
        let mut witness = vec![usize::MAX; g.m()];
        for (i, o) in orientations.iter().enumerate() {
            let set = o
                .deletable_set()
                .map_err(|_| CertificateError::NotStronglyConnected(i))?;
            for e in set.iter() {
                if witness[e] == usize::MAX {
                    witness[e] = i;
                }
            }
        }
        if let Some(e) = witness.iter().position(|&w| w == usize::MAX) {
            return Err(CertificateError::EdgeNotCovered(e));
        }
        Ok(Certificate {
            graph6: write_graph6(g),
            claimed_k: orientations.len(),
            orientations: orientations.iter().map(|o| o.arcs()).collect(),
            witness,
        })
    }

    /// Like [`Certificate::from_orientations`] for packed direction bits.
    pub fn from_packed(g: &Graph, orientations: &[u64]) -> Result<Self, CertificateError> {
        let list: Vec<Orientation<'_>> = orientations
            .iter()
            .map(|&b| Orientation::from_u64(g, b))
            .collect();
        Self::from_orientations(g, &list)
    }

    pub fn graph(&self) -> Result<Graph, crate::graph::Graph6Error> {
        parse_graph6(&self.graph6)
    }

    pub fn orientation<'g>(
        &self,
        g: &'g Graph,
        i: usize,
    ) -> Result<Orientation<'g>, OrientationError> {
        Orientation::from_arcs(g, &self.orientations[i])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
pub enum VerifyFailure {
    #[error("certificate is for graph {found}, expected {expected}")]
    GraphMismatch { expected: String, found: String },
    #[error("claimed k = {claimed} but {found} orientations given")]
    CountMismatch { claimed: usize, found: usize },
    #[error("orientation {index} is not an orientation of the graph: {reason}")]
    InvalidOrientation { index: usize, reason: String },
    #[error("orientation {0} is not strongly connected")]
    NotStronglyConnected(usize),
    #[error("witness list has {found} entries for {expected} edges")]
    WitnessLength { expected: usize, found: usize },
    #[error("witness for edge {0} names a missing orientation")]
    WitnessOutOfRange(usize),
    #[error("edge {0} is not deletable in its witness orientation")]
    WitnessNotDeletable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub failure: Option<VerifyFailure>,
    pub claimed_k: usize,
    /// Per-edge witness orientation, echoed on success.
    pub witnesses: Vec<usize>,
}

impl VerifyReport {
    fn fail(c: &Certificate, failure: VerifyFailure) -> Self {
        VerifyReport {
            valid: false,
            failure: Some(failure),
            claimed_k: c.claimed_k,
            witnesses: Vec::new(),
        }
    }
}

/// Checks every claim of `c` against `g` and reports the first failure.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> VerifyReport {
    let expected = write_graph6(g);
    if c.graph6 != expected {
        return VerifyReport::fail(
            c,
            VerifyFailure::GraphMismatch {
                expected,
                found: c.graph6.clone(),
            },
        );
    }
    if c.orientations.len() != c.claimed_k {
        return VerifyReport::fail(
            c,
            VerifyFailure::CountMismatch {
                claimed: c.claimed_k,
                found: c.orientations.len(),
            },
        );
    }
    let mut orientations = Vec::with_capacity(c.claimed_k);
    for (index, arcs) in c.orientations.iter().enumerate() {
        match Orientation::from_arcs(g, arcs) {
            Ok(o) => orientations.push(o),
            Err(err) => {
                return VerifyReport::fail(
                    c,
                    VerifyFailure::InvalidOrientation {
                        index,
                        reason: err.to_string(),
                    },
                )
            }
        }
    }
    if let Some(i) = orientations.iter().position(|o| !o.is_strongly_connected()) {
        return VerifyReport::fail(c, VerifyFailure::NotStronglyConnected(i));
    }
    if c.witness.len() != g.m() {
        return VerifyReport::fail(
            c,
            VerifyFailure::WitnessLength {
                expected: g.m(),
                found: c.witness.len(),
            },
        );
    }
    for (e, &w) in c.witness.iter().enumerate() {
        let Some(o) = orientations.get(w) else {
            return VerifyReport::fail(c, VerifyFailure::WitnessOutOfRange(e));
        };
        let (tail, head) = o.arc(e);
        if !o.has_path_avoiding(tail, head, Some(e)) {
            return VerifyReport::fail(c, VerifyFailure::WitnessNotDeletable(e));
        }
    }
    VerifyReport {
        valid: true,
        failure: None,
        claimed_k: c.claimed_k,
        witnesses: c.witness.clone(),
    }
}
