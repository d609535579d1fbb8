//! Small-graph sweep: every cubic 3-edge-connected graph on up to 10
//! vertices, with its exact Frank number.
//!
//! Usage: `cargo run --example sweep [max_order]`

use frank::graph::{enumerate_cubic_3ec, write_graph6};
use frank::solver::{frank_number_exact, Budget};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(10, |s| s.parse().expect("order"));
    for n in (4..=max).step_by(2) {
        let graphs = enumerate_cubic_3ec(n).unwrap();
        println!("n = {n}: {} graphs", graphs.len());
        if n > 10 {
            continue;
        }
        for g in &graphs {
            let report = frank_number_exact(g, 3, &Budget::default()).unwrap();
            println!(
                "  {:<12} F = {}  ({} SC orientations, max deletable {})",
                write_graph6(g),
                report.frank_number.exact().unwrap(),
                report.stats.sc_orientations,
                report.stats.max_deletable
            );
        }
    }
}
