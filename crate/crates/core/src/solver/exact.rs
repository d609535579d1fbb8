//! Exact Frank numbers by exhausting the orientation space.
//!
//! The scan collects every distinct deletable set, the sets are reduced to
//! the inclusion-maximal ones, and covers of the edge set by `k = 1, 2, ...`
//! maximal sets are searched exhaustively. The first `k` with a cover is
//! the Frank number; the failed search at `k - 1` is the lower-bound proof.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::search::{cover_search, SearchOptions};
use super::space::{OrientationSpace, ScanOptions, MAX_SCAN_EDGES};
use super::SolverError;
use crate::certificate::{verify_certificate, Certificate};
use crate::graph::{edge_connectivity, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_edges: usize,
    pub time_limit: Option<Duration>,
    pub fix_first_edge: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_edges: MAX_SCAN_EDGES,
            time_limit: None,
            fix_first_edge: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exhaustive scan and cover search.
    Exact,
    /// Randomized search; an upper bound only.
    Search,
    /// A 2-certificate combined with the connectivity lower bound.
    NashWilliams,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrankValue {
    Exact(usize),
    Bounds { lower: usize, upper: Option<usize> },
}

impl FrankValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            FrankValue::Exact(k) => Some(k),
            FrankValue::Bounds { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolveStats {
    pub orientations_scanned: u64,
    pub sc_orientations: u64,
    pub distinct_deletable_sets: usize,
    pub maximal_deletable_sets: usize,
    pub max_deletable: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LowerBoundEvidence {
    /// Graphs that are not 4-edge-connected have no 2-arc-connected
    /// orientation, so no single orientation makes every edge deletable.
    pub connectivity_bound: Option<usize>,
    /// Largest `k` for which an exhaustive search found no cover of the
    /// edge set by `k` deletable sets.
    pub no_cover_of_size: Option<usize>,
    pub sets_considered: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub frank_number: FrankValue,
    pub method: Method,
    pub edge_connectivity: usize,
    pub certificate: Option<Certificate>,
    pub lower_bound: LowerBoundEvidence,
    pub stats: SolveStats,
}

struct Deadline(Option<Instant>);

impl Deadline {
    fn passed(&self) -> bool {
        self.0.is_some_and(|d| Instant::now() > d)
    }
}

pub fn frank_number_exact(
    g: &Graph,
    max_k: usize,
    budget: &Budget,
) -> Result<SolveReport, SolverError> {
    let started = Instant::now();
    let deadline = Deadline(budget.time_limit.map(|t| started + t));
    let connectivity = edge_connectivity(g);
    if connectivity < 3 {
        return Err(SolverError::NotThreeEdgeConnected(connectivity));
    }
    let space = OrientationSpace::new(g)?;
    let opts = ScanOptions {
        fix_first_edge: budget.fix_first_edge,
        prune: true,
        max_edges: budget.max_edges,
    };
    let summary = space.scan(&opts)?;
    let maximal = summary.maximal_sets();
    let sets: Vec<u64> = maximal.iter().map(|&(s, _)| s).collect();

    let mut report = SolveReport {
        frank_number: FrankValue::Bounds {
            lower: if connectivity < 4 { 2 } else { 1 },
            upper: None,
        },
        method: Method::Exact,
        edge_connectivity: connectivity,
        certificate: None,
        lower_bound: LowerBoundEvidence {
            connectivity_bound: (connectivity < 4).then_some(2),
            no_cover_of_size: None,
            sets_considered: sets.len(),
        },
        stats: SolveStats {
            orientations_scanned: summary.orientations_scanned,
            sc_orientations: summary.sc_orientations,
            distinct_deletable_sets: summary.sets.len(),
            maximal_deletable_sets: sets.len(),
            max_deletable: summary.max_deletable(),
            seconds: 0.0,
        },
    };

    let full = space.full_mask();
    for k in 1..=max_k {
        match find_cover(&sets, full, k, &deadline) {
            Err(TimedOut) => {
                report.stats.seconds = started.elapsed().as_secs_f64();
                report.frank_number = FrankValue::Bounds {
                    lower: k,
                    upper: None,
                };
                return Err(SolverError::Inconclusive(Box::new(report)));
            }
            Ok(None) => report.lower_bound.no_cover_of_size = Some(k),
            Ok(Some(chosen)) => {
                let witnesses: Vec<u64> = chosen.iter().map(|&i| maximal[i].1).collect();
                let certificate = Certificate::from_packed(g, &witnesses)
                    .expect("maximal-set witnesses form a certificate");
                report.frank_number = FrankValue::Exact(k);
                report.certificate = Some(certificate);
                report.stats.seconds = started.elapsed().as_secs_f64();
                return Ok(report);
            }
        }
    }
    report.stats.seconds = started.elapsed().as_secs_f64();
    report.frank_number = FrankValue::Bounds {
        lower: max_k + 1,
        upper: None,
    };
    Err(SolverError::Inconclusive(Box::new(report)))
}

#[derive(Debug)]
struct TimedOut;

/// Exhaustive search for `k` sets whose union is `full`. Branches on the
/// uncovered edge contained in the fewest sets and prunes when `k` sets of
/// the largest remaining size cannot cover what is left.
fn find_cover(
    sets: &[u64],
    full: u64,
    k: usize,
    deadline: &Deadline,
) -> Result<Option<Vec<usize>>, TimedOut> {
    let m = 64 - full.leading_zeros() as usize;
    let containing: Vec<Vec<usize>> = (0..m)
        .map(|e| (0..sets.len()).filter(|&i| sets[i] >> e & 1 == 1).collect())
        .collect();
    let largest = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    let mut chosen = Vec::with_capacity(k);
    let mut nodes = 0u64;
    let found = cover_from(
        sets,
        &containing,
        full,
        0,
        k,
        largest,
        &mut chosen,
        &mut nodes,
        deadline,
    )?;
    Ok(found.then_some(chosen))
}

#[allow(clippy::too_many_arguments)]
fn cover_from(
    sets: &[u64],
    containing: &[Vec<usize>],
    full: u64,
    covered: u64,
    remaining: usize,
    largest: u32,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    deadline: &Deadline,
) -> Result<bool, TimedOut> {
    let uncovered = full & !covered;
    if uncovered == 0 {
        return Ok(true);
    }
    if remaining == 0 || uncovered.count_ones() > remaining as u32 * largest {
        return Ok(false);
    }
    *nodes += 1;
    if nodes.is_multiple_of(4096) && deadline.passed() {
        return Err(TimedOut);
    }
    let mut pivot = None;
    let mut rest = uncovered;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if pivot.is_none_or(|p: usize| containing[e].len() < containing[p].len()) {
            pivot = Some(e);
        }
    }
    let pivot = pivot.expect("uncovered is nonempty");
    for &i in &containing[pivot] {
        chosen.push(i);
        if cover_from(
            sets,
            containing,
            full,
            covered | sets[i],
            remaining - 1,
            largest,
            chosen,
            nodes,
            deadline,
        )? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Minimum cover size by exhaustive search, for callers that already hold
/// the deletable sets.
pub fn minimum_cover(sets: &[u64], full: u64, max_k: usize) -> Option<(usize, Vec<usize>)> {
    let none = Deadline(None);
    (1..=max_k).find_map(|k| {
        find_cover(sets, full, k, &none)
            .expect("no deadline")
            .map(|chosen| (k, chosen))
    })
}

/// Exact computation when the orientation space fits the budget, otherwise
/// a 2-certificate (the `hint` if it verifies, else [`cover_search`] with
/// `seed`) combined with the connectivity bound: a 3-edge-connected graph
/// with a 2-certificate has Frank number exactly 2.
///
/// [`cover_search`]: super::cover_search
pub fn solve(
    g: &Graph,
    max_k: usize,
    budget: &Budget,
    seed: u64,
    hint: Option<Certificate>,
) -> Result<SolveReport, SolverError> {
    if g.m() <= budget.max_edges {
        return frank_number_exact(g, max_k, budget);
    }
    let started = Instant::now();
    let connectivity = edge_connectivity(g);
    if connectivity < 3 {
        return Err(SolverError::NotThreeEdgeConnected(connectivity));
    }
    let hint = hint.filter(|c| c.claimed_k <= max_k && verify_certificate(g, c).valid);
    let certificate = match hint {
        Some(c) => Some(c),
        None => {
            let opts = SearchOptions {
                k: 2.min(max_k),
                seed,
                time_limit: budget.time_limit.or(SearchOptions::default().time_limit),
                ..SearchOptions::default()
            };
            cover_search(g, &opts)?.certificate
        }
    };
    let lower = if connectivity < 4 { 2 } else { 1 };
    let upper = certificate.as_ref().map(|c| c.claimed_k);
    let mut report = SolveReport {
        frank_number: match upper {
            Some(k) if k == lower => FrankValue::Exact(k),
            _ => FrankValue::Bounds { lower, upper },
        },
        method: if upper == Some(lower) {
            Method::NashWilliams
        } else {
            Method::Search
        },
        edge_connectivity: connectivity,
        certificate,
        lower_bound: LowerBoundEvidence {
            connectivity_bound: (connectivity < 4).then_some(2),
            no_cover_of_size: None,
            sets_considered: 0,
        },
        stats: SolveStats::default(),
    };
    report.stats.seconds = started.elapsed().as_secs_f64();
    if upper.is_none() {
        return Err(SolverError::Inconclusive(Box::new(report)));
    }
    Ok(report)
}
