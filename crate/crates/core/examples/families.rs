//! Family generators and graph6 round trips.
//!
//! Usage: `cargo run --example families [spec ...]`, e.g. `gp:7,3 wheel:5`.

use frank::graph::{
    automorphism_group, edge_connectivity, generate_family, girth, is_three_edge_colorable,
    parse_graph6, write_graph6, FamilySpec,
};

fn main() {
    let mut specs: Vec<FamilySpec> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("family spec"))
        .collect();
    if specs.is_empty() {
        specs = [
            "k4",
            "petersen",
            "wheel:6",
            "mobius:8",
            "prism:5",
            "gp:7,3",
            "flower:5",
            "blanusa:1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    }
    for spec in specs {
        let g = generate_family(&spec).unwrap();
        let text = write_graph6(&g);
        assert_eq!(parse_graph6(&text).unwrap(), g);
        let colorable = if g.is_cubic() {
            is_three_edge_colorable(&g).to_string()
        } else {
            "-".into()
        };
        let aut = automorphism_group(&g).map_or("-".to_string(), |a| a.order().to_string());
        println!(
            "{spec:<10} {text:<24} n = {:>2}  m = {:>2}  girth {:?}  edge connectivity {}  |Aut| = {aut}  3-edge-colorable {}",
            g.n(),
            g.m(),
            girth(&g),
            edge_connectivity(&g),
            colorable
        );
    }
}
