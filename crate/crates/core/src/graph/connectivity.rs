use std::collections::VecDeque;

use super::Graph;

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

/// Maximum number of edge-disjoint `s`-`t` paths, stopping early once
/// `limit` paths are found.
///
/// Each undirected edge is a pair of opposite unit-capacity arcs; augmenting
/// paths are found by breadth-first search.
pub fn max_flow(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    if s == t {
        return limit;
    }
    // flow[e] in {-1, 0, 1}: +1 means one unit from the smaller endpoint to the larger.
    let mut flow = vec![0i8; g.m()];
    let mut total = 0;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    while total < limit {
        parent.iter_mut().for_each(|p| *p = None);
        let mut queue = VecDeque::from([s]);
        let mut reached = false;
        'bfs: while let Some(v) = queue.pop_front() {
            for &e in g.incident_edges(v) {
                let w = g.other_end(e, v);
                if w == s || parent[w].is_some() {
                    continue;
                }
                let forward = if v < w { 1 } else { -1 };
                // residual capacity of arc v -> w is 1 - flow in that direction
                if flow[e] * forward < 1 {
                    parent[w] = Some((v, e));
                    if w == t {
                        reached = true;
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if !reached {
            break;
        }
        let mut w = t;
        while let Some((v, e)) = parent[w] {
            flow[e] += if v < w { 1 } else { -1 };
            w = v;
        }
        total += 1;
    }
    total
}

/// Global edge connectivity: the minimum over `t` of the max flow from
/// vertex 0 to `t`. Disconnected graphs (and graphs with fewer than two
/// vertices) return 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() < 2 || !is_connected(g) {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..g.n() {
        best = best.min(max_flow(g, 0, t, best));
        if best == 0 {
            break;
        }
    }
    best
}

/// Articulation points, in increasing order.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| {
            let start = match g.neighbors(v).first() {
                Some(&w) => w,
                None => return false,
            };
            let mut seen = vec![false; g.n()];
            seen[v] = true;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            // a cut vertex leaves some other vertex unreachable
            g.neighbors(v).iter().any(|&w| !seen[w])
        })
        .collect()
}
