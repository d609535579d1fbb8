//! Orientations of a graph, strong connectivity and deletable edges.
//!
//! Direction convention: bit `e` set means edge `e = (u, v)`, `u < v`, is
//! the arc `u -> v`; clear means `v -> u`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("orientation has {found} direction bits, graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("arc {index} ({tail}, {head}) does not orient edge {index} of the graph")]
    ArcMismatch {
        index: usize,
        tail: usize,
        head: usize,
    },
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
}

#[derive(Clone)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    forward: FixedBitSet,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl<'g> Orientation<'g> {
    pub fn new(graph: &'g Graph, forward: FixedBitSet) -> Result<Self, OrientationError> {
        if forward.len() != graph.m() {
            return Err(OrientationError::LengthMismatch {
                expected: graph.m(),
                found: forward.len(),
            });
        }
        let mut out = vec![Vec::new(); graph.n()];
        let mut inn = vec![Vec::new(); graph.n()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            let (t, h) = if forward[e] { (u, v) } else { (v, u) };
            out[t].push(h);
            inn[h].push(t);
        }
        Ok(Orientation {
            graph,
            forward,
            out,
            inn,
        })
    }

    pub fn from_bools(graph: &'g Graph, bits: &[bool]) -> Result<Self, OrientationError> {
        let mut set = FixedBitSet::with_capacity(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            set.set(i, b);
        }
        Self::new(graph, set)
    }

    /// Orientation from packed bits; requires `m <= 64`.
    pub fn from_u64(graph: &'g Graph, bits: u64) -> Self {
        assert!(graph.m() <= 64, "packed orientations need at most 64 edges");
        let mut set = FixedBitSet::with_capacity(graph.m());
        for e in 0..graph.m() {
            set.set(e, bits >> e & 1 == 1);
        }
        Self::new(graph, set).expect("length matches by construction")
    }

    /// Orientation from an arc list in canonical edge order.
    pub fn from_arcs(graph: &'g Graph, arcs: &[[usize; 2]]) -> Result<Self, OrientationError> {
        if arcs.len() != graph.m() {
            return Err(OrientationError::LengthMismatch {
                expected: graph.m(),
                found: arcs.len(),
            });
        }
        let mut set = FixedBitSet::with_capacity(graph.m());
        for (index, &[tail, head]) in arcs.iter().enumerate() {
            let (u, v) = graph.edge(index);
            if (tail, head) == (u, v) {
                set.insert(index);
            } else if (tail, head) != (v, u) {
                return Err(OrientationError::ArcMismatch { index, tail, head });
            }
        }
        Self::new(graph, set)
    }

    /// Every edge directed from its smaller endpoint to its larger one.
    pub fn ascending(graph: &'g Graph) -> Self {
        let mut set = FixedBitSet::with_capacity(graph.m());
        set.insert_range(..);
        Self::new(graph, set).expect("length matches by construction")
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.forward
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.graph.m() > 64 {
            return None;
        }
        Some(self.forward.ones().fold(0u64, |acc, e| acc | 1 << e))
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edge(e);
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self) -> Vec<[usize; 2]> {
        (0..self.graph.m())
            .map(|e| {
                let (t, h) = self.arc(e);
                [t, h]
            })
            .collect()
    }

    /// One character per edge in canonical order, `1` for ascending arcs.
    pub fn bitstring(&self) -> String {
        (0..self.graph.m())
            .map(|e| if self.forward[e] { '1' } else { '0' })
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// The orientation with every arc reversed.
    pub fn reverse(&self) -> Orientation<'g> {
        let mut forward = self.forward.clone();
        forward.toggle_range(..);
        Orientation {
            graph: self.graph,
            forward,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// The orientation with the arc of edge `e` reversed.
    pub fn flip(&self, e: usize) -> Orientation<'g> {
        let mut forward = self.forward.clone();
        forward.toggle(e);
        Orientation::new(self.graph, forward).expect("same length")
    }

    /// The orientation with every listed edge reversed.
    pub fn flip_all(&self, edges: &[usize]) -> Orientation<'g> {
        let mut forward = self.forward.clone();
        for &e in edges {
            forward.toggle(e);
        }
        Orientation::new(self.graph, forward).expect("same length")
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.graph.n() <= 1 || strong_components(&self.out).len() == 1
    }

    /// Whether a directed path `from -> to` exists that does not use the
    /// arc of edge `skip`.
    pub fn has_path_avoiding(&self, from: usize, to: usize, skip: Option<usize>) -> bool {
        let skipped = skip.map(|e| self.arc(e));
        let mut seen = vec![false; self.graph.n()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            for &w in &self.out[v] {
                if seen[w] || skipped == Some((v, w)) {
                    continue;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
        false
    }

    /// Whether removing edge `e` leaves the orientation strongly connected.
    ///
    /// For a strongly connected orientation this holds exactly when a
    /// directed tail-to-head path avoids the arc itself. With `check_strong`
    /// the strong connectivity precondition is verified first.
    pub fn is_deletable(&self, e: usize, check_strong: bool) -> Result<bool, OrientationError> {
        if e >= self.graph.m() {
            return Err(OrientationError::EdgeOutOfRange(e));
        }
        if check_strong && !self.is_strongly_connected() {
            return Err(OrientationError::NotStronglyConnected);
        }
        let (t, h) = self.arc(e);
        Ok(self.has_path_avoiding(t, h, Some(e)))
    }

    pub fn deletable_set(&self) -> Result<DeletableSet, OrientationError> {
        self.deletable_set_with(true)
    }

    /// All deletable edges. With `prune`, arcs whose tail has out-degree 1
    /// or whose head has in-degree 1 are skipped without a path query; such
    /// an arc is the only way out of its tail (or into its head). On cubic
    /// graphs this is the red-to-green condition.
    pub fn deletable_set_with(&self, prune: bool) -> Result<DeletableSet, OrientationError> {
        if !self.is_strongly_connected() {
            return Err(OrientationError::NotStronglyConnected);
        }
        let mut edges = FixedBitSet::with_capacity(self.graph.m());
        for e in 0..self.graph.m() {
            let (t, h) = self.arc(e);
            if prune && (self.out_degree(t) < 2 || self.in_degree(h) < 2) {
                continue;
            }
            if self.has_path_avoiding(t, h, Some(e)) {
                edges.insert(e);
            }
        }
        Ok(DeletableSet {
            edges,
            source: self.to_u64(),
        })
    }

    pub fn color_vertices(&self) -> VertexColoring {
        let mut coloring = VertexColoring::default();
        for v in 0..self.graph.n() {
            let bucket = match (self.graph.degree(v), self.out_degree(v), self.in_degree(v)) {
                (3, 2, _) => &mut coloring.red,
                (3, _, 2) => &mut coloring.green,
                _ => &mut coloring.neutral,
            };
            bucket.push(v);
        }
        coloring
    }
}

impl PartialEq for Orientation<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.forward == other.forward
    }
}

impl Eq for Orientation<'_> {}

impl std::fmt::Debug for Orientation<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation({})", self.bitstring())
    }
}

/// Serializes as the arc list `[[tail, head], ...]` in canonical edge order.
impl Serialize for Orientation<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.graph.m()))?;
        for arc in self.arcs() {
            seq.serialize_element(&arc)?;
        }
        seq.end()
    }
}

/// The deletable edges of one strongly connected orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletableSet {
    pub edges: FixedBitSet,
    /// Packed direction bits of the source orientation, when `m <= 64`.
    pub source: Option<u64>,
}

impl DeletableSet {
    pub fn len(&self) -> usize {
        self.edges.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_clear()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.ones()
    }

    pub fn to_u64(&self) -> u64 {
        self.edges.ones().fold(0u64, |acc, e| acc | 1 << e)
    }
}

/// Red: degree 3 with out-degree 2. Green: degree 3 with in-degree 2.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexColoring {
    pub red: Vec<usize>,
    pub green: Vec<usize>,
    pub neutral: Vec<usize>,
}

/// Strongly connected components of a digraph given by out-neighbor lists
/// (iterative Tarjan). Components come out in reverse topological order.
pub fn strong_components(out: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = out.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut counter = 0;
    // (vertex, next neighbor position)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = frames.last_mut() {
            if let Some(&w) = out[v].get(*next) {
                *next += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds v");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, generate_family, k4, FamilySpec};

    fn circuit(n: usize) -> Graph {
        cycle(n)
    }

    /// C_n oriented 0 -> 1 -> ... -> n-1 -> 0.
    fn directed_circuit(g: &Graph) -> Orientation<'_> {
        let n = g.n();
        let arcs: Vec<[usize; 2]> = g
            .edges()
            .iter()
            .map(|&(u, v)| if v == (u + 1) % n { [u, v] } else { [v, u] })
            .collect();
        Orientation::from_arcs(g, &arcs).unwrap()
    }

    #[test]
    fn directed_five_circuit() {
        let g = circuit(5);
        let o = directed_circuit(&g);
        assert!(o.is_strongly_connected());
        assert!(o.deletable_set().unwrap().is_empty());
        for e in 0..5 {
            assert!(!o.is_deletable(e, true).unwrap());
        }
        let flipped = o.flip(2);
        assert!(!flipped.is_strongly_connected());
        assert_eq!(
            flipped.is_deletable(0, true),
            Err(OrientationError::NotStronglyConnected)
        );
    }

    #[test]
    fn reversal() {
        let g = circuit(6);
        let o = directed_circuit(&g);
        let r = o.reverse();
        assert!(r.is_strongly_connected());
        assert_eq!(r.reverse(), o);
        for v in 0..6 {
            assert_eq!(r.out_neighbors(v), o.in_neighbors(v));
        }
    }

    #[test]
    fn length_and_arc_errors() {
        let g = k4();
        let err = Orientation::from_bools(&g, &[true; 5]).unwrap_err();
        assert_eq!(
            err,
            OrientationError::LengthMismatch {
                expected: 6,
                found: 5
            }
        );
        let mut arcs = Orientation::ascending(&g).arcs();
        arcs[1] = [0, 3];
        assert!(matches!(
            Orientation::from_arcs(&g, &arcs),
            Err(OrientationError::ArcMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn k4_tournaments() {
        let g = k4();
        for bits in 0..64u64 {
            let o = Orientation::from_u64(&g, bits);
            let total: usize = (0..4).map(|v| o.out_degree(v)).sum();
            assert_eq!(total, 6);
            assert_eq!(o.to_u64(), Some(bits));
            if (0..4).any(|v| o.in_degree(v) == 0) {
                assert!(!o.is_strongly_connected());
            }
        }
    }

    #[test]
    fn sinks_are_not_colored() {
        let g = k4();
        // vertex 3 has in-degree 3
        let o =
            Orientation::from_arcs(&g, &[[0, 1], [2, 0], [0, 3], [1, 2], [1, 3], [2, 3]]).unwrap();
        let c = o.color_vertices();
        assert!(c.neutral.contains(&3));
        assert!(!o.is_strongly_connected());
    }

    #[test]
    fn tarjan_components() {
        let out = vec![vec![1], vec![2], vec![0, 3], vec![4], vec![3]];
        let mut comps = strong_components(&out);
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn wheel_colors() {
        let w = generate_family(&FamilySpec::Wheel(4)).unwrap();
        let o = Orientation::ascending(&w);
        // hub has degree 4 and is never colored
        assert!(o.color_vertices().neutral.contains(&0));
    }
}
