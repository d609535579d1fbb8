//! Isomorphism classes of cubic 3-edge-connected graphs.
//!
//! Every 3-connected cubic graph other than K4 arises from a 3-connected
//! cubic graph with two fewer vertices by an edge insertion: subdivide two
//! distinct edges and join the two subdivision vertices. Generation runs
//! that step level by level from K4, keeps the 3-edge-connected results and
//! deduplicates by canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use super::{canonical_form, edge_connectivity, k4, write_graph6, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {0} exceeds the enumeration limit of {MAX_ENUMERATION_ORDER}")]
    TooLarge(usize),
    #[error("cubic graphs have even order, got {0}")]
    OddOrder(usize),
}

/// One representative per isomorphism class, canonically labeled and
/// sorted by graph6 string.
pub fn enumerate_cubic_3ec(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n % 2 == 1 {
        return Err(EnumerateError::OddOrder(n));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::TooLarge(n));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut level = vec![canonical_form(&k4()).0];
    let mut order = 4;
    while order < n {
        level = next_level(&level);
        order += 2;
    }
    Ok(level)
}

fn next_level(graphs: &[Graph]) -> Vec<Graph> {
    let found: Vec<(String, Graph)> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let m = g.m();
            (0..m).flat_map(move |e| (e + 1..m).map(move |f| insert_edge(g, e, f)))
        })
        .filter(|h| edge_connectivity(h) >= 3)
        .map(|h| {
            let canon = canonical_form(&h).0;
            (write_graph6(&canon), canon)
        })
        .collect();
    let unique: BTreeMap<String, Graph> = found.into_iter().collect();
    unique.into_values().collect()
}

/// Subdivides edges `e` and `f` with new vertices `n` and `n + 1` and joins them.
fn insert_edge(g: &Graph, e: usize, f: usize) -> Graph {
    let n = g.n();
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e && i != f)
        .map(|(_, &p)| p)
        .collect();
    edges.extend([(a, n), (n, b), (c, n + 1), (n + 1, d), (n, n + 1)]);
    Graph::new(n + 2, edges).expect("edge insertion keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphisms, generate_family, is_isomorphic, FamilySpec};
    use std::collections::BTreeSet;

    /// Independent oracle: every labeled cubic graph with N(0) = {1, 2, 3}
    /// (each isomorphism class has such a labeling), by backtracking over
    /// degree-constrained edge sets.
    fn brute_force_cubic(n: usize) -> BTreeSet<String> {
        let mut classes = BTreeSet::new();
        let mut adj = vec![vec![false; n]; n];
        let mut deg = vec![0usize; n];
        for w in 1..=3 {
            adj[0][w] = true;
            adj[w][0] = true;
            deg[w] = 1;
        }
        deg[0] = 3;
        fill(n, 1, 2, &mut adj, &mut deg, &mut classes);
        classes
    }

    fn fill(
        n: usize,
        v: usize,
        start: usize,
        adj: &mut Vec<Vec<bool>>,
        deg: &mut Vec<usize>,
        out: &mut BTreeSet<String>,
    ) {
        if v == n {
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = edges.filter(|&(i, j)| adj[i][j]).collect();
            let g = Graph::new(n, edges).unwrap();
            if edge_connectivity(&g) >= 3 {
                out.insert(write_graph6(&canonical_form(&g).0));
            }
            return;
        }
        if deg[v] == 3 {
            return fill(n, v + 1, v + 2, adj, deg, out);
        }
        // complete v's neighborhood with larger vertices, in increasing order
        for w in start..n {
            if adj[v][w] || deg[w] == 3 {
                continue;
            }
            adj[v][w] = true;
            adj[w][v] = true;
            deg[v] += 1;
            deg[w] += 1;
            fill(n, v, w + 1, adj, deg, out);
            deg[v] -= 1;
            deg[w] -= 1;
            adj[v][w] = false;
            adj[w][v] = false;
        }
    }

    #[test]
    fn counts_match_brute_force() {
        for n in [4, 6, 8] {
            let generated: BTreeSet<String> = enumerate_cubic_3ec(n)
                .unwrap()
                .iter()
                .map(write_graph6)
                .collect();
            assert_eq!(generated, brute_force_cubic(n), "n = {n}");
        }
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_cubic_3ec(6).unwrap().len(), 2);
        assert_eq!(enumerate_cubic_3ec(8).unwrap().len(), 4);
        let ten = enumerate_cubic_3ec(10).unwrap();
        assert_eq!(ten.len(), 14);
        let petersen = generate_family(&FamilySpec::Petersen).unwrap();
        assert_eq!(
            ten.iter().filter(|g| is_isomorphic(g, &petersen)).count(),
            1
        );
        for (i, g) in ten.iter().enumerate() {
            for h in &ten[i + 1..] {
                assert!(!is_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn six_vertex_classes_are_prism_and_k33() {
        let six = enumerate_cubic_3ec(6).unwrap();
        let prism = generate_family(&FamilySpec::Prism(3)).unwrap();
        let mobius = generate_family(&FamilySpec::Mobius(6)).unwrap();
        assert!(six.iter().any(|g| is_isomorphic(g, &prism)));
        assert!(six.iter().any(|g| is_isomorphic(g, &mobius)));
        assert_eq!(
            automorphisms(&six[0]).len() + automorphisms(&six[1]).len(),
            12 + 72
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            enumerate_cubic_3ec(7).unwrap_err(),
            EnumerateError::OddOrder(7)
        );
        assert_eq!(
            enumerate_cubic_3ec(14).unwrap_err(),
            EnumerateError::TooLarge(14)
        );
        assert!(enumerate_cubic_3ec(2).unwrap().is_empty());
    }
}
