//! Undirected simple graphs with a canonical edge index.
//!
//! Vertices are the dense integers `0..n`. Edges are stored as pairs `(u, v)`
//! with `u < v`, sorted lexicographically; the position of an edge in that
//! list is its canonical index, which every edge bitset in the crate uses.

mod automorphism;
mod connectivity;
mod enumerate;
mod families;
mod graph6;
mod properties;

pub use automorphism::{
    automorphism_group, automorphisms, canonical_form, find_isomorphism, is_isomorphic, AutGroup,
    AutomorphismError, MAX_AUTOMORPHISM_ORDER,
};
pub use connectivity::{cut_vertices, edge_connectivity, is_connected, max_flow};
pub use enumerate::{enumerate_cubic_3ec, EnumerateError, MAX_ENUMERATION_ORDER};
pub use families::{generate_family, FamilyError, FamilySpec};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6, Graph6Error};
pub use properties::{find_hamiltonian_cycle, find_triangles, girth, is_three_edge_colorable};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An immutable undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from arbitrary vertex pairs, normalizing each pair to
    /// `(min, max)` and sorting. Loops and repeated pairs are rejected.
    pub fn new(
        n: usize,
        edge_pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (u, v) in edge_pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incidence[u].push(i);
            incidence[v].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
            incidence,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Canonical indices of the edges incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// The endpoint of edge `index` other than `v`.
    pub fn other_end(&self, index: usize, v: usize) -> usize {
        let (a, b) = self.edges[index];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabeling must cover every vertex");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(self.n, edges)
    }

    /// The graph with the listed edges removed (vertex set unchanged).
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, &e)| e)
            .collect();
        Graph::from_sorted(self.n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Convenience constructor matching the `build_graph` entry point.
pub fn build_graph(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edge_pairs.iter().copied())
}

/// The complete graph on four vertices.
pub fn k4() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid K4")
}

/// The cycle `0, 1, ..., n-1`.
pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}
