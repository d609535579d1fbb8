//! Local cubic modification, good matchings at cut vertices, triangle
//! contraction and reduction to a triangle-free graph.

use frank::graph::{cut_vertices, edge_connectivity, generate_family, write_graph6, FamilySpec};
use frank::solver::{frank_number_exact, Budget};
use frank::transforms::{
    glued_k4_pair, good_matching, local_cubic_modification, reduce_to_triangle_free, Matching,
    TransformSpec,
};

fn frank(g: &frank::graph::Graph) -> usize {
    frank_number_exact(g, 4, &Budget::default())
        .unwrap()
        .frank_number
        .exact()
        .unwrap()
}

fn main() {
    // a cut vertex of degree 6: the contiguous matching leaves a 2-edge cut
    let g = glued_k4_pair();
    println!(
        "two K4 on one vertex: cut vertices {:?}, F = {}",
        cut_vertices(&g),
        frank(&g)
    );
    let (bad, _) = local_cubic_modification(&g, &Matching::ascending(&g, 0)).unwrap();
    println!(
        "  ascending matching:  edge connectivity {}",
        edge_connectivity(&bad)
    );
    let m = good_matching(&g, 0).unwrap();
    let (good, trace) = local_cubic_modification(&g, &m).unwrap();
    println!(
        "  good matching {:?}: edge connectivity {}, F = {}, cycle {:?}",
        m.order,
        edge_connectivity(&good),
        frank(&good),
        trace.cycle
    );

    // the hub of a wheel becomes a cycle: the result is a prism
    let wheel = generate_family(&FamilySpec::Wheel(5)).unwrap();
    let (h, _) = "lcm:0"
        .parse::<TransformSpec>()
        .unwrap()
        .apply(&wheel)
        .unwrap();
    println!(
        "wheel:5 (F = {}) -> lcm:0 -> {} (F = {})",
        frank(&wheel),
        write_graph6(&h),
        frank(&h)
    );

    // contract triangles until none is left
    let prism = generate_family(&FamilySpec::Prism(3)).unwrap();
    let (truncated, _) = "truncate:0"
        .parse::<TransformSpec>()
        .unwrap()
        .apply(&prism)
        .unwrap();
    let (reduced, traces) = reduce_to_triangle_free(&truncated).unwrap();
    println!(
        "prism:3 truncated at 0 has n = {}; {} contractions give {} (n = {})",
        truncated.n(),
        traces.len(),
        write_graph6(&reduced),
        reduced.n()
    );
}
