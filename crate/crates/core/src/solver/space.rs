//! Bit-packed scans of the orientation space.
//!
//! An orientation of a graph with at most 64 edges and 64 vertices is a
//! `u64` of direction bits; out- and in-neighborhoods are `u64` vertex masks.
//! Strong connectivity is a forward and a backward reachability sweep from
//! vertex 0, and deletability of `t -> h` is reachability of `h` from `t`
//! with that one arc masked out.

use std::collections::HashMap;

use rayon::prelude::*;

use super::SolverError;
use crate::graph::Graph;
use crate::orientation::{DeletableSet, Orientation};

/// Default cap on the number of edges for a full scan.
pub const MAX_SCAN_EDGES: usize = 30;

const MAX_PACKED: usize = 64;
const CHUNK_BITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Fix edge 0 to its ascending direction. Reversal preserves deletable
    /// sets, so this halves the space without losing any set.
    pub fix_first_edge: bool,
    /// Skip path queries for arcs whose tail has out-degree 1 or whose head
    /// has in-degree 1.
    pub prune: bool,
    pub max_edges: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            fix_first_edge: true,
            prune: true,
            max_edges: MAX_SCAN_EDGES,
        }
    }
}

/// Distinct deletable sets found by a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub orientations_scanned: u64,
    pub sc_orientations: u64,
    /// `(deletable set, smallest orientation bits realizing it)`, sorted by set.
    pub sets: Vec<(u64, u64)>,
}

impl ScanSummary {
    pub fn max_deletable(&self) -> usize {
        self.sets
            .iter()
            .map(|(s, _)| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Sets not strictly contained in another set, largest first (ties by
    /// set value), each with its witness orientation.
    pub fn maximal_sets(&self) -> Vec<(u64, u64)> {
        let mut by_size = self.sets.clone();
        by_size.sort_by_key(|&(s, _)| (std::cmp::Reverse(s.count_ones()), s));
        let mut kept: Vec<(u64, u64)> = Vec::new();
        for (set, witness) in by_size {
            if !kept.iter().any(|&(k, _)| k & set == set) {
                kept.push((set, witness));
            }
        }
        kept
    }
}

#[derive(Clone)]
pub struct OrientationSpace<'g> {
    graph: &'g Graph,
    ends: Vec<(u32, u32)>,
    n: usize,
}

impl<'g> OrientationSpace<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, SolverError> {
        if graph.m() > MAX_PACKED || graph.n() > MAX_PACKED {
            return Err(SolverError::SpaceTooLarge {
                edges: graph.m(),
                limit: MAX_PACKED,
            });
        }
        let ends = graph
            .edges()
            .iter()
            .map(|&(u, v)| (u as u32, v as u32))
            .collect();
        Ok(OrientationSpace {
            graph,
            ends,
            n: graph.n(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn full_mask(&self) -> u64 {
        low_bits(self.m())
    }

    fn all_vertices(&self) -> u64 {
        low_bits(self.n)
    }

    fn masks(&self, bits: u64) -> ([u64; MAX_PACKED], [u64; MAX_PACKED]) {
        let mut out = [0u64; MAX_PACKED];
        let mut inn = [0u64; MAX_PACKED];
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let (t, h) = if bits >> e & 1 == 1 { (u, v) } else { (v, u) };
            out[t as usize] |= 1 << h;
            inn[h as usize] |= 1 << t;
        }
        (out, inn)
    }

    fn reach(adj: &[u64; MAX_PACKED], from: usize, target: u64) -> u64 {
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 && seen & target != target {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_strongly_connected(&self, bits: u64) -> bool {
        let (out, inn) = self.masks(bits);
        self.strong(&out, &inn)
    }

    fn strong(&self, out: &[u64; MAX_PACKED], inn: &[u64; MAX_PACKED]) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = self.all_vertices();
        // cheap rejection: a source or a sink
        if (0..self.n).any(|v| out[v] == 0 || inn[v] == 0) {
            return false;
        }
        Self::reach(out, 0, all) == all && Self::reach(inn, 0, all) == all
    }

    /// The deletable set of `bits` if the orientation is strongly connected.
    pub fn deletable(&self, bits: u64, prune: bool) -> Option<u64> {
        let (mut out, inn) = self.masks(bits);
        if !self.strong(&out, &inn) {
            return None;
        }
        let mut set = 0u64;
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let (t, h) = if bits >> e & 1 == 1 {
                (u as usize, v as usize)
            } else {
                (v as usize, u as usize)
            };
            if prune && (out[t].count_ones() < 2 || inn[h].count_ones() < 2) {
                continue;
            }
            let saved = out[t];
            out[t] = saved & !(1 << h);
            if Self::reach(&out, t, 1 << h) >> h & 1 == 1 {
                set |= 1 << e;
            }
            out[t] = saved;
        }
        Some(set)
    }

    fn free_bits(&self, opts: &ScanOptions) -> Result<u32, SolverError> {
        if self.m() > opts.max_edges {
            return Err(SolverError::SpaceTooLarge {
                edges: self.m(),
                limit: opts.max_edges,
            });
        }
        Ok((self.m() - usize::from(opts.fix_first_edge && self.m() > 0)) as u32)
    }

    /// Maps a counter over the free bits to orientation bits.
    fn expand(&self, opts: &ScanOptions, index: u64) -> u64 {
        if opts.fix_first_edge && self.m() > 0 {
            index << 1 | 1
        } else {
            index
        }
    }

    /// Every strongly connected orientation with its deletable set, in
    /// increasing order of the scan counter.
    pub fn sc_orientations(&self, opts: &ScanOptions) -> Result<Vec<(u64, u64)>, SolverError> {
        let free = self.free_bits(opts)?;
        let chunks = chunk_count(free);
        let per_chunk = (1u64 << free) / chunks;
        let found: Vec<Vec<(u64, u64)>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                (c * per_chunk..(c + 1) * per_chunk)
                    .filter_map(|i| {
                        let bits = self.expand(opts, i);
                        self.deletable(bits, opts.prune).map(|d| (bits, d))
                    })
                    .collect()
            })
            .collect();
        Ok(found.into_iter().flatten().collect())
    }

    /// Sequential iterator over strongly connected orientations.
    pub fn iter_sc<'a>(
        &'a self,
        opts: &ScanOptions,
    ) -> Result<impl Iterator<Item = (u64, u64)> + 'a, SolverError> {
        let free = self.free_bits(opts)?;
        let opts = *opts;
        Ok((0..1u64 << free).filter_map(move |i| {
            let bits = self.expand(&opts, i);
            self.deletable(bits, opts.prune).map(|d| (bits, d))
        }))
    }

    /// Distinct deletable sets with their smallest witnesses. The result
    /// does not depend on the number of worker threads.
    pub fn scan(&self, opts: &ScanOptions) -> Result<ScanSummary, SolverError> {
        let free = self.free_bits(opts)?;
        let chunks = chunk_count(free);
        let per_chunk = (1u64 << free) / chunks;
        let partial: Vec<(u64, HashMap<u64, u64>)> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut local: HashMap<u64, u64> = HashMap::new();
                let mut sc = 0;
                for i in c * per_chunk..(c + 1) * per_chunk {
                    let bits = self.expand(opts, i);
                    if let Some(d) = self.deletable(bits, opts.prune) {
                        sc += 1;
                        local.entry(d).or_insert(bits);
                    }
                }
                (sc, local)
            })
            .collect();
        let mut merged: HashMap<u64, u64> = HashMap::new();
        let mut sc_orientations = 0;
        for (sc, local) in partial {
            sc_orientations += sc;
            for (set, bits) in local {
                merged
                    .entry(set)
                    .and_modify(|b| *b = (*b).min(bits))
                    .or_insert(bits);
            }
        }
        let mut sets: Vec<(u64, u64)> = merged.into_iter().collect();
        sets.sort_unstable();
        Ok(ScanSummary {
            orientations_scanned: 1u64 << free,
            sc_orientations,
            sets,
        })
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn chunk_count(free: u32) -> u64 {
    1u64 << free.saturating_sub(CHUNK_BITS)
}

/// Options for [`enumerate_sc_orientations`].
pub type EnumerateOptions = ScanOptions;

/// Streams every strongly connected orientation of `g` together with its
/// deletable set, in deterministic order.
pub fn enumerate_sc_orientations<'g>(
    g: &'g Graph,
    opts: &EnumerateOptions,
) -> Result<impl Iterator<Item = (Orientation<'g>, DeletableSet)> + 'g, SolverError> {
    let space = OrientationSpace::new(g)?;
    let pairs = space.sc_orientations(opts)?;
    let m = g.m();
    Ok(pairs.into_iter().map(move |(bits, set)| {
        let mut edges = fixedbitset::FixedBitSet::with_capacity(m);
        for e in 0..m {
            edges.set(e, set >> e & 1 == 1);
        }
        (
            Orientation::from_u64(g, bits),
            DeletableSet {
                edges,
                source: Some(bits),
            },
        )
    }))
}
