//! Validates a planar framework and prints its self-stress space from the balancing kernel.
//!
//! Usage: `cargo run --example planar_self_stress [input.json]`

use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::exactlinalg::format_rat;
use toric_tensegrity::framework::{balancing_matrix, self_stress_basis, validate_planar};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_3_5a.json").into());
    let text = std::fs::read_to_string(&path).expect("readable input");
    let InputDocument::Planar(doc) = parse(&text).expect("well-formed input") else {
        panic!("{path} is not a planar framework");
    };
    let fw = doc.to_framework().expect("consistent ids");

    let report = validate_planar(&fw);
    for w in &report.warnings {
        println!("warning: {w}");
    }
    if !report.is_valid() {
        for f in &report.failures {
            println!("failure: {f}");
        }
        std::process::exit(3);
    }

    let a = balancing_matrix(&fw).unwrap();
    println!("{} vertices, {} edges, balancing matrix {}x{}", fw.vertices().len(), fw.edges().len(), a.rows(), a.cols());
    let basis = self_stress_basis(&fw).unwrap();
    if !basis.is_tensegrity() {
        println!("only the zero self-stress: not a tensegrity");
        return;
    }
    println!("self-stress space of dimension {}", basis.dim());
    for i in 0..basis.dim() {
        let parts: Vec<String> = basis.entries(i).map(|(edge, w)| format!("{edge}={}", format_rat(w))).collect();
        println!("  w{i}: {}", parts.join(" "));
    }
}
