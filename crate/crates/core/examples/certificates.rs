//! Writing, reading and checking certificate JSON, including a tampered
//! certificate that the verifier rejects.

use frank::certificate::{verify_certificate, Certificate};
use frank::constructions::gp_certificate;

fn main() {
    let c = gp_certificate(3).unwrap();
    let g = c.graph().unwrap();
    let text = c.to_json();
    println!("{text}");
    let read = Certificate::from_json(&text).unwrap();
    println!("round trip equal: {}", read == c);
    println!("report: {:?}", verify_certificate(&g, &read));

    let mut tampered = read.clone();
    tampered.orientations[0].swap(0, 1);
    println!(
        "swapped arcs: {:?}",
        verify_certificate(&g, &tampered).failure
    );
    let mut tampered = read;
    tampered.claimed_k = 1;
    println!(
        "wrong claim: {:?}",
        verify_certificate(&g, &tampered).failure
    );
}
