#![allow(dead_code)]

use frank::graph::{
    build_graph, edge_connectivity, enumerate_cubic_3ec, generate_family, k4, FamilySpec, Graph,
};

/// Small graphs (at most 14 edges) with strongly connected orientations.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![("k4".into(), k4())];
    for spec in [
        FamilySpec::Wheel(3),
        FamilySpec::Wheel(4),
        FamilySpec::Wheel(5),
        FamilySpec::Wheel(6),
        FamilySpec::Wheel(7),
        FamilySpec::Prism(3),
        FamilySpec::Prism(4),
        FamilySpec::Mobius(4),
        FamilySpec::Mobius(6),
        FamilySpec::Mobius(8),
    ] {
        out.push((spec.to_string(), generate_family(&spec).unwrap()));
    }
    for (i, g) in enumerate_cubic_3ec(8).unwrap().into_iter().enumerate() {
        out.push((format!("cubic8-{i}"), g));
    }
    let complete5: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    out.push(("k5".into(), build_graph(5, &complete5).unwrap()));
    out.push(("k5-e".into(), build_graph(5, &complete5[1..]).unwrap()));
    // 2-edge-connected graphs: their orientations still have deletable arcs
    out.push(("c5".into(), frank::graph::cycle(5)));
    out.push((
        "theta".into(),
        build_graph(5, &[(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 2)]).unwrap(),
    ));
    out.push((
        "bowtie".into(),
        build_graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap(),
    ));
    out.push((
        "k4-subdivided".into(),
        build_graph(5, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap(),
    ));
    assert!(out.iter().all(|(_, g)| g.m() <= 14));
    out
}

pub fn three_edge_connected(corpus: Vec<(String, Graph)>) -> Vec<(String, Graph)> {
    corpus
        .into_iter()
        .filter(|(_, g)| edge_connectivity(g) >= 3)
        .collect()
}

/// Arcs of the orientation `bits` (bit `e` set: edge `e` runs from its
/// smaller to its larger endpoint), optionally without arc `skip`.
pub fn arcs(g: &Graph, bits: u64, skip: Option<usize>) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| Some(e) != skip)
        .map(|(e, &(u, v))| if bits >> e & 1 == 1 { (u, v) } else { (v, u) })
        .collect()
}

fn reach(n: usize, arcs: &[(usize, usize)], reverse: bool) -> usize {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &(a, b) in arcs {
            let (from, to) = if reverse { (b, a) } else { (a, b) };
            if from == x && !seen[to] {
                seen[to] = true;
                count += 1;
                stack.push(to);
            }
        }
    }
    count
}

/// Strong connectivity by forward and backward reachability from vertex 0.
pub fn strongly_connected(n: usize, arcs: &[(usize, usize)]) -> bool {
    reach(n, arcs, false) == n && reach(n, arcs, true) == n
}

/// Deletable arcs by recomputing strong connectivity without each arc.
pub fn oracle_deletable(g: &Graph, bits: u64) -> Option<u64> {
    if !strongly_connected(g.n(), &arcs(g, bits, None)) {
        return None;
    }
    Some((0..g.m()).fold(0, |acc, e| {
        if strongly_connected(g.n(), &arcs(g, bits, Some(e))) {
            acc | 1 << e
        } else {
            acc
        }
    }))
}

/// Every strongly connected orientation with its deletable set, over the
/// whole space with no symmetry reduction.
pub fn oracle_scan(g: &Graph) -> Vec<(u64, u64)> {
    (0..1u64 << g.m())
        .filter_map(|bits| oracle_deletable(g, bits).map(|d| (bits, d)))
        .collect()
}

/// Smallest number of deletable sets covering every edge, trying all
/// combinations of distinct sets of size up to `max_k`.
pub fn oracle_frank(g: &Graph, max_k: usize) -> Option<usize> {
    let full = (1u64 << g.m()) - 1;
    let mut sets: Vec<u64> = oracle_scan(g).into_iter().map(|(_, d)| d).collect();
    sets.sort_unstable();
    sets.dedup();
    fn covers(sets: &[u64], start: usize, left: usize, acc: u64, full: u64) -> bool {
        if acc == full {
            return true;
        }
        left > 0 && (start..sets.len()).any(|i| covers(sets, i + 1, left - 1, acc | sets[i], full))
    }
    (1..=max_k).find(|&k| covers(&sets, 0, k, 0, full))
}
