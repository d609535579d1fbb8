//! Randomized search for 2-certificates on flower and Blanusa snarks.
//!
//! Usage: `cargo run --example snarks [seed] [--freeze DIR]`
//!
//! With `--freeze` the certificates are written to `DIR` together with a
//! manifest; this is how `fixtures/` was produced.

use std::path::PathBuf;

use frank::certificate::verify_certificate;
use frank::fixtures::{regenerate, SNARKS};
use frank::graph::{edge_connectivity, generate_family, girth, is_three_edge_colorable};
use frank::solver::{cover_search, SearchOptions};

fn main() {
    let mut seed = 0;
    let mut freeze = None;
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--freeze" {
            freeze = Some(PathBuf::from(
                args.next().expect("--freeze needs a directory"),
            ));
        } else {
            seed = a.parse().expect("seed is an integer");
        }
    }
    if let Some(dir) = freeze {
        let manifest = regenerate(&dir, seed).unwrap();
        for e in &manifest.entries {
            println!(
                "{} -> {} ({} restarts, {:.3} s)",
                e.family,
                dir.join(&e.file).display(),
                e.restarts,
                e.search_seconds
            );
        }
        return;
    }
    for spec in &SNARKS {
        let g = generate_family(spec).unwrap();
        println!(
            "{spec}: n = {}, m = {}, girth {:?}, edge connectivity {}, 3-edge-colorable {}",
            g.n(),
            g.m(),
            girth(&g),
            edge_connectivity(&g),
            is_three_edge_colorable(&g)
        );
        let out = cover_search(
            &g,
            &SearchOptions {
                k: 2,
                seed,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        match &out.certificate {
            Some(c) => println!(
                "  2-certificate after {} restarts ({:.2} s), verifies: {}",
                out.restarts,
                out.seconds,
                verify_certificate(&g, c).valid
            ),
            None => println!(
                "  nothing found in {} restarts ({:.2} s)",
                out.restarts, out.seconds
            ),
        }
    }
}
