use std::collections::VecDeque;

use super::Graph;

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// All triangles as sorted vertex triples, in lexicographic order.
pub fn find_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Exhaustive proper 3-edge-coloring search.
pub fn is_three_edge_colorable(g: &Graph) -> bool {
    if (0..g.n()).any(|v| g.degree(v) > 3) {
        return false;
    }
    let mut colors = vec![u8::MAX; g.m()];
    color_from(g, 0, &mut colors)
}

fn color_from(g: &Graph, e: usize, colors: &mut [u8]) -> bool {
    if e == g.m() {
        return true;
    }
    let (u, v) = g.edge(e);
    for c in 0..3u8 {
        let clash = g
            .incident_edges(u)
            .iter()
            .chain(g.incident_edges(v))
            .any(|&f| colors[f] == c);
        if clash {
            continue;
        }
        colors[e] = c;
        if color_from(g, e + 1, colors) {
            return true;
        }
        colors[e] = u8::MAX;
    }
    false
}

/// A Hamiltonian cycle as a vertex sequence starting at 0, found by
/// backtracking.
pub fn find_hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut path = vec![0];
    let mut on_path = vec![false; n];
    on_path[0] = true;
    if extend_path(g, &mut path, &mut on_path) {
        Some(path)
    } else {
        None
    }
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.n() {
        return g.has_edge(last, path[0]);
    }
    for &w in g.neighbors(last) {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if extend_path(g, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}
