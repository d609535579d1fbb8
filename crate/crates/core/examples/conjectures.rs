//! The four conjectures on small 3-edge-connected cubic graphs.
//!
//! Usage: `cargo run --example conjectures [max_order]` (default 12;
//! conjectures 1 to 3 are checked up to order 10).

use frank::graph::enumerate_cubic_3ec;
use frank::solver::check_conjectures;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(12, |s| s.parse().expect("order"));
    for n in (4..=max).step_by(2) {
        let graphs = enumerate_cubic_3ec(n).unwrap();
        let which: &[u8] = if n <= 10 { &[1, 2, 3, 4] } else { &[4] };
        let report = check_conjectures(&graphs, which).unwrap();
        let tallies: Vec<String> = which
            .iter()
            .map(|&c| {
                let (holds, fails, skipped) = report.tally(c);
                format!("C{c}: {holds} hold / {fails} fail / {skipped} skipped")
            })
            .collect();
        println!(
            "n = {n:>2} ({} graphs): {}",
            graphs.len(),
            tallies.join(", ")
        );
    }
}
