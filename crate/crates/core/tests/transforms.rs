//! Frank-number laws of truncation, triangle contraction and local cubic
//! modification on small 3-edge-connected graphs.

mod common;

use frank::certificate::verify_certificate;
use frank::graph::{
    build_graph, cut_vertices, edge_connectivity, enumerate_cubic_3ec, find_triangles,
    generate_family, FamilySpec, Graph,
};
use frank::orientation::Orientation;
use frank::solver::{frank_number_exact, Budget, OrientationSpace, ScanOptions};
use frank::transforms::{
    contract_triangle, glued_k4_pair, good_matching, lift_certificate, local_cubic_modification,
    project_orientation, reduce_to_triangle_free, truncate, Matching, TransformError,
};

fn frank(g: &Graph) -> usize {
    frank_number_exact(g, 4, &Budget::default())
        .unwrap()
        .frank_number
        .exact()
        .unwrap()
}

fn small_cubic() -> Vec<Graph> {
    (4..=10)
        .step_by(2)
        .flat_map(|n| enumerate_cubic_3ec(n).unwrap())
        .collect()
}

#[test]
fn truncation_preserves_frank_number() {
    for g in small_cubic() {
        let f = frank(&g);
        for v in 0..g.n() {
            let (h, _) = truncate(&g, v).unwrap();
            assert_eq!(edge_connectivity(&h), 3);
            assert_eq!(frank(&h), f, "truncating {v}");
        }
    }
}

#[test]
fn contraction_preserves_frank_number() {
    let mut contracted = 0;
    for g in small_cubic() {
        let f = frank(&g);
        for t in find_triangles(&g) {
            match contract_triangle(&g, t) {
                Ok((h, trace)) => {
                    assert_eq!(frank(&h), f, "contracting {t:?}");
                    assert_eq!(trace.vertex_origin.len(), h.n());
                    contracted += 1;
                }
                // a triangle sharing an edge with another triangle (or K4)
                // has no simple contraction
                Err(TransformError::WouldCreateMultiedge(_)) => {
                    let shares_edge = find_triangles(&g)
                        .iter()
                        .any(|s| s != &t && s.iter().filter(|x| t.contains(x)).count() == 2);
                    assert!(shares_edge, "{t:?}");
                }
                Err(e) => panic!("{t:?}: {e}"),
            }
        }
    }
    assert!(contracted > 10);
}

#[test]
fn truncation_inverts_contraction() {
    for g in small_cubic() {
        for v in 0..g.n() {
            let (h, trace) = truncate(&g, v).unwrap();
            let mut triangle = [trace.cycle[0], trace.cycle[1], trace.cycle[2]];
            triangle.sort_unstable();
            let (back, _) = contract_triangle(&h, triangle).unwrap();
            assert!(frank::graph::is_isomorphic(&g, &back));
        }
    }
}

#[test]
fn reduction_ends_triangle_free_or_at_k4() {
    for g in small_cubic() {
        let f = frank(&g);
        let (h, traces) = reduce_to_triangle_free(&g).unwrap();
        assert_eq!(h.n(), g.n() - 2 * traces.len());
        assert!(find_triangles(&h).is_empty() || h.n() == 4);
        assert_eq!(frank(&h), f);
    }
}

fn cut_vertex_corpus() -> Vec<Graph> {
    let mut out = vec![glued_k4_pair()];
    // K5 and K4 sharing vertex 0
    let mut edges: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    edges.extend([(0, 5), (0, 6), (0, 7), (5, 6), (5, 7), (6, 7)]);
    out.push(build_graph(8, &edges).unwrap());
    // three K4 blocks on one vertex
    let mut edges = Vec::new();
    for o in [1, 4, 7] {
        edges.extend([
            (0, o),
            (0, o + 1),
            (0, o + 2),
            (o, o + 1),
            (o, o + 2),
            (o + 1, o + 2),
        ]);
    }
    out.push(build_graph(10, &edges).unwrap());
    out
}

#[test]
fn good_matching_keeps_three_edge_connectivity() {
    let mut corpus = cut_vertex_corpus();
    for g in &corpus {
        assert!(!cut_vertices(g).is_empty());
        assert!(edge_connectivity(g) >= 3);
    }
    for spec in [
        FamilySpec::Wheel(5),
        FamilySpec::Wheel(8),
        FamilySpec::Petersen,
    ] {
        corpus.push(generate_family(&spec).unwrap());
    }
    corpus.extend(
        common::three_edge_connected(common::small_corpus())
            .into_iter()
            .map(|(_, g)| g),
    );
    for g in &corpus {
        for v in 0..g.n() {
            let matching = good_matching(g, v).unwrap();
            let (h, trace) = local_cubic_modification(g, &matching).unwrap();
            assert!(edge_connectivity(&h) >= 3, "vertex {v}");
            assert_eq!(h.n(), g.n() + g.degree(v) - 1);
            assert_eq!(trace.cycle.len(), g.degree(v));
        }
    }
}

#[test]
fn contiguous_matching_at_a_cut_vertex_breaks_connectivity() {
    let g = glued_k4_pair();
    let (h, _) = local_cubic_modification(&g, &Matching::ascending(&g, 0)).unwrap();
    assert_eq!(edge_connectivity(&h), 2);
}

#[test]
fn modification_never_lowers_frank_number() {
    let mut corpus = cut_vertex_corpus();
    corpus.extend(
        common::three_edge_connected(common::small_corpus())
            .into_iter()
            .map(|(_, g)| g),
    );
    for g in &corpus {
        let f = frank(g);
        for v in 0..g.n() {
            let (h, _) = local_cubic_modification(g, &good_matching(g, v).unwrap()).unwrap();
            if h.m() <= 24 {
                assert!(frank(&h) >= f, "vertex {v}");
            }
        }
    }
}

#[test]
fn projection_keeps_strong_connectivity() {
    for g in small_cubic().into_iter().take(6) {
        let (h, trace) = local_cubic_modification(&g, &good_matching(&g, 0).unwrap()).unwrap();
        let space = OrientationSpace::new(&h).unwrap();
        for (bits, _) in space.iter_sc(&ScanOptions::default()).unwrap().step_by(7) {
            let o = Orientation::from_u64(&h, bits);
            let p = project_orientation(&g, &o, &trace).unwrap();
            assert!(p.is_strongly_connected());
        }
    }
}

#[test]
fn lifted_certificates_verify() {
    for g in small_cubic() {
        let c = frank_number_exact(&g, 3, &Budget::default())
            .unwrap()
            .certificate
            .unwrap();
        for v in 0..g.n() {
            let (h, trace) = truncate(&g, v).unwrap();
            let (lifted, record) = lift_certificate(&g, &c, &trace).unwrap();
            assert_eq!(lifted.claimed_k, c.claimed_k);
            assert!(verify_certificate(&h, &lifted).valid);
            assert_eq!(record.patterns.len(), c.claimed_k);
        }
    }
}
