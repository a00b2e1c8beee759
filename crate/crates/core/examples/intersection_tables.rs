//! Multiplicities, wall relations and the divisor-by-wall intersection table.
//!
//! Usage: `cargo run --example intersection_tables [input.json]`

use num_traits::{One, Signed, Zero};
use toric_tensegrity::chow::{intersection_table, multiplicity_table, wall_relation};
use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::fanbuild::{build_fan, triangulate, TriangulationOrder};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_3_5a.json").into());
    let InputDocument::Planar(doc) = parse(&std::fs::read_to_string(&path).expect("readable input")).expect("well-formed input") else {
        panic!("{path} is not a planar framework");
    };
    let fw = doc.to_framework().expect("consistent ids");
    let fan = build_fan(&fw, &triangulate(&fw, TriangulationOrder::Lex).unwrap()).expect("valid fan");

    let mults = multiplicity_table(&fan).unwrap();
    println!("{}", mults.iter().map(|r| format!("{}={}", r.cone, r.mult)).collect::<Vec<_>>().join(" "));

    // relation among generators: alpha u' + beta u'' + sum lambda_i v_i = 0
    for w in 0..fan.walls.len() {
        let r = wall_relation(&fan, w).unwrap();
        let mut terms = vec![(r.u_prime, r.alpha.clone()), (r.u_second, r.beta.clone())];
        terms.extend(r.lambda.iter().cloned());
        let mut line = String::new();
        for (ray, c) in terms.into_iter().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { " - " } else if line.is_empty() { "" } else { " + " };
            let c = c.abs();
            let coeff = if c.is_one() { String::new() } else { c.to_string() };
            line += &format!("{sign}{coeff}v{ray}");
        }
        println!("{}: {line} = 0", fan.wall_name(w));
    }

    let table = intersection_table(&fan).unwrap();
    println!();
    println!("      {}", table.wall_names.iter().map(|n| format!("{n:>7}")).collect::<String>());
    for (name, row) in table.ray_names.iter().zip(table.formatted()) {
        println!("{name:<6}{}", row.iter().map(|x| format!("{x:>7}")).collect::<String>());
    }
}
