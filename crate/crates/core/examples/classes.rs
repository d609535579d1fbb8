//! Orientation classes of a graph under its automorphism group, with and
//! without identifying an orientation with its reversal.
//!
//! Usage: `cargo run --example classes [family]` (default `petersen`)

use frank::graph::{generate_family, FamilySpec};
use frank::orientation::Orientation;
use frank::solver::orientation_classes;

fn main() {
    let spec: FamilySpec = std::env::args()
        .nth(1)
        .map_or(Ok(FamilySpec::Petersen), |s| s.parse())
        .expect("a family spec such as petersen or gp:7,3");
    let g = generate_family(&spec).unwrap();
    for include_reversal in [false, true] {
        let classes = orientation_classes(&g, include_reversal).unwrap();
        println!(
            "{spec}, reversal identified: {include_reversal}: {} SC orientations, |Aut| = {}, {} classes",
            classes.sc_orientations,
            classes.group_order,
            classes.count()
        );
        for c in &classes.classes {
            let o = Orientation::from_u64(&g, c.representative);
            let set = o.deletable_set().unwrap();
            let touched = (0..g.n()).all(|v| g.incident_edges(v).iter().any(|&e| set.contains(e)));
            println!(
                "  size {:>4}  deletable {:>2}  touches every vertex {:<5}  {}",
                c.size,
                c.deletable_count(),
                touched,
                o.bitstring()
            );
        }
    }
}
