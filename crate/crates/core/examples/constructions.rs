//! Constructive 2-certificates for wheels, Möbius ladders, prisms and
//! GP(2s+1, s), each checked by the verifier.

use std::time::Instant;

use frank::certificate::verify_certificate;
use frank::constructions::{
    gp_certificate, mobius_certificate, prism_certificate, wheel_certificate,
};

fn main() {
    let started = Instant::now();
    let mut rows = Vec::new();
    rows.extend((3..=12).map(|n| (format!("wheel:{n}"), wheel_certificate(n))));
    rows.extend(
        (4..=16)
            .step_by(2)
            .map(|n| (format!("mobius:{n}"), mobius_certificate(n))),
    );
    rows.extend((3..=12).map(|k| (format!("prism:{k}"), prism_certificate(k))));
    rows.extend((3..=8).map(|s| (format!("gp:{},{s}", 2 * s + 1), gp_certificate(s))));
    for (name, result) in rows {
        match result {
            Ok(c) => {
                let g = c.graph().unwrap();
                println!(
                    "{name:<12} k = {}  verifies: {}",
                    c.claimed_k,
                    verify_certificate(&g, &c).valid
                );
            }
            Err(e) => println!("{name:<12} {e}"),
        }
    }
    println!("{:.1} s", started.elapsed().as_secs_f64());
}
