//! Randomized local search for Frank certificates on graphs whose
//! orientation space is too large to exhaust.
//!
//! A state is `k` strongly connected orientations. Two moves keep every
//! orientation strongly connected: flipping a deletable arc, and reversing
//! a directed circuit. Moves are accepted when they do not decrease the
//! number of covered edges; a restart begins after a stretch without
//! improvement. Restarts run in fixed-size parallel batches, each seeded
//! from `(seed, restart index)`, and the lowest successful index wins, so
//! the outcome depends only on the seed.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::space::OrientationSpace;
use super::SolverError;
use crate::certificate::{verify_certificate, Certificate};
use crate::graph::{edge_connectivity, Graph};
use crate::orientation::strong_components;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub k: usize,
    pub seed: u64,
    pub time_limit: Option<Duration>,
    pub max_restarts: u64,
    pub steps_per_restart: u64,
    /// Steps without improvement before giving up on a restart.
    pub stagnation: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            k: 2,
            seed: 0,
            time_limit: Some(Duration::from_secs(900)),
            max_restarts: u64::MAX,
            steps_per_restart: 200_000,
            stagnation: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub certificate: Option<Certificate>,
    pub seed: u64,
    pub restarts: u64,
    /// Index of the restart that produced the certificate.
    pub winning_restart: Option<u64>,
    pub seconds: f64,
}

const BATCH: u64 = 8;

pub fn cover_search(g: &Graph, opts: &SearchOptions) -> Result<SearchOutcome, SolverError> {
    let started = Instant::now();
    let space = OrientationSpace::new(g)?;
    let mut outcome = SearchOutcome {
        certificate: None,
        seed: opts.seed,
        restarts: 0,
        winning_restart: None,
        seconds: 0.0,
    };
    if opts.k == 0 || !has_sc_orientation(g) {
        return Ok(outcome);
    }
    let mut next = 0u64;
    while next < opts.max_restarts {
        if opts.time_limit.is_some_and(|t| started.elapsed() > t) {
            break;
        }
        let batch = BATCH.min(opts.max_restarts - next);
        let found = (next..next + batch)
            .into_par_iter()
            .map(|r| (r, climb(&space, opts, r)))
            .find_first(|(_, tuple)| tuple.is_some());
        next += batch;
        outcome.restarts = next;
        if let Some((r, Some(tuple))) = found {
            let certificate = Certificate::from_packed(g, &tuple)
                .expect("search keeps covers strongly connected");
            debug_assert!(verify_certificate(g, &certificate).valid);
            outcome.winning_restart = Some(r);
            outcome.restarts = r + 1;
            outcome.certificate = Some(certificate);
            break;
        }
    }
    outcome.seconds = started.elapsed().as_secs_f64();
    Ok(outcome)
}

fn has_sc_orientation(g: &Graph) -> bool {
    g.m() > 0 && edge_connectivity(g) >= 2
}

fn restart_rng(seed: u64, restart: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    rng
}

/// One restart; returns the orientations of a cover if it finds one.
fn climb(space: &OrientationSpace<'_>, opts: &SearchOptions, restart: u64) -> Option<Vec<u64>> {
    let mut rng = restart_rng(opts.seed, restart);
    let full = space.full_mask();
    let mut tuple: Vec<u64> = (0..opts.k).map(|_| random_sc(space, &mut rng)).collect();
    let mut sets: Vec<u64> = tuple
        .iter()
        .map(|&b| {
            space
                .deletable(b, true)
                .expect("start is strongly connected")
        })
        .collect();
    let mut covered = sets.iter().fold(0, |a, s| a | s);
    let mut best = covered.count_ones();
    let mut since_best = 0u64;
    for _ in 0..opts.steps_per_restart {
        if covered == full {
            return Some(tuple);
        }
        if since_best > opts.stagnation {
            return None;
        }
        let i = rng.gen_range(0..opts.k);
        let candidate = if rng.gen_bool(0.5) && sets[i] != 0 {
            tuple[i] ^ 1 << random_bit(sets[i], &mut rng)
        } else {
            match random_circuit(space, tuple[i], &mut rng) {
                Some(mask) => tuple[i] ^ mask,
                None => continue,
            }
        };
        let new_set = space
            .deletable(candidate, true)
            .expect("moves preserve strong connectivity");
        let others = sets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0, |a, (_, s)| a | s);
        let new_covered = others | new_set;
        if new_covered.count_ones() >= covered.count_ones() {
            tuple[i] = candidate;
            sets[i] = new_set;
            covered = new_covered;
        }
        if covered.count_ones() > best {
            best = covered.count_ones();
            since_best = 0;
        } else {
            since_best += 1;
        }
    }
    (covered == full).then_some(tuple)
}

fn random_bit(mask: u64, rng: &mut impl Rng) -> u32 {
    let mut pick = rng.gen_range(0..mask.count_ones());
    let mut rest = mask;
    loop {
        let e = rest.trailing_zeros();
        if pick == 0 {
            return e;
        }
        pick -= 1;
        rest &= rest - 1;
    }
}

/// Out-arcs of every vertex as `(head, edge)` pairs.
fn out_arcs(g: &Graph, bits: u64) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if bits >> e & 1 == 1 {
            out[u].push((v, e));
        } else {
            out[v].push((u, e));
        }
    }
    out
}

/// Edge mask of a directed circuit found by a random walk. In a strongly
/// connected orientation every vertex has an out-arc, so the walk closes.
fn random_circuit(space: &OrientationSpace<'_>, bits: u64, rng: &mut impl Rng) -> Option<u64> {
    let g = space.graph();
    let out = out_arcs(g, bits);
    let mut position = vec![usize::MAX; g.n()];
    let mut walk: Vec<usize> = Vec::new();
    let mut v = rng.gen_range(0..g.n());
    loop {
        if position[v] != usize::MAX {
            return Some(walk[position[v]..].iter().fold(0, |a, &e| a | 1 << e));
        }
        position[v] = walk.len();
        let &(next, e) = out[v].choose(rng)?;
        walk.push(e);
        v = next;
    }
}

/// A uniformly random orientation repaired into a strongly connected one
/// by reversing an arc entering a sink component until none remains.
fn random_sc(space: &OrientationSpace<'_>, rng: &mut impl Rng) -> u64 {
    let g = space.graph();
    let mut bits: u64 = rng.gen::<u64>() & space.full_mask();
    for _ in 0..4 * g.m() {
        if space.is_strongly_connected(bits) {
            return bits;
        }
        let out: Vec<Vec<usize>> = out_arcs(g, bits)
            .into_iter()
            .map(|arcs| arcs.into_iter().map(|(h, _)| h).collect())
            .collect();
        let components = strong_components(&out);
        let mut component = vec![0; g.n()];
        for (c, members) in components.iter().enumerate() {
            for &v in members {
                component[v] = c;
            }
        }
        let sinks: Vec<usize> = (0..components.len())
            .filter(|&c| {
                components[c]
                    .iter()
                    .all(|&v| out[v].iter().all(|&h| component[h] == c))
            })
            .collect();
        let sink = *sinks.choose(rng).expect("a condensation has a sink");
        let entering: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, &(u, v))| {
                let (t, h) = if bits >> e & 1 == 1 { (u, v) } else { (v, u) };
                component[h] == sink && component[t] != sink
            })
            .map(|(e, _)| e)
            .collect();
        bits ^= 1
            << entering
                .choose(rng)
                .expect("a connected graph enters every sink");
    }
    robbins(g, rng)
}

/// Tree arcs away from the root and back arcs toward it along a random
/// depth-first search; strongly connected on bridgeless graphs.
fn robbins(g: &Graph, rng: &mut impl Rng) -> u64 {
    let mut visited = vec![false; g.n()];
    let mut bits = 0u64;
    let mut used = vec![false; g.m()];
    let root = rng.gen_range(0..g.n());
    let mut stack = vec![root];
    visited[root] = true;
    let mut pending: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut edges = g.incident_edges(v).to_vec();
            edges.shuffle(rng);
            edges
        })
        .collect();
    while let Some(&v) = stack.last() {
        let Some(e) = pending[v].pop() else {
            stack.pop();
            continue;
        };
        if used[e] {
            continue;
        }
        used[e] = true;
        // a tree arc leads down to w; any other unused edge reaches an ancestor
        let w = g.other_end(e, v);
        if !visited[w] {
            visited[w] = true;
            stack.push(w);
        }
        if v < w {
            bits |= 1 << e;
        }
    }
    bits
}
