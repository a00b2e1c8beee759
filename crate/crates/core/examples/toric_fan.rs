//! Lifts a planar framework to a complete simplicial fan in rank 3 and checks it.
//!
//! Usage: `cargo run --example toric_fan [input.json] [lex|revlex]`

use toric_tensegrity::chow::{cone_mult, wall_mult};
use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::fanbuild::{build_fan, triangulate, validate_fan, RayLabel, TriangulationOrder, WallKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_3_5b.json").into());
    let order = match args.next().as_deref() {
        Some("revlex") => TriangulationOrder::RevLex,
        _ => TriangulationOrder::Lex,
    };
    let InputDocument::Planar(doc) = parse(&std::fs::read_to_string(&path).expect("readable input")).expect("well-formed input") else {
        panic!("{path} is not a planar framework");
    };
    let fw = doc.to_framework().expect("consistent ids");
    let t = triangulate(&fw, order).expect("triangulable point set");
    let added: Vec<String> = t.added_edges.iter().map(|&(a, b)| format!("{}-{}", fw.vertices()[a].id, fw.vertices()[b].id)).collect();
    println!("{order:?} triangulation: {} triangles, added edges [{}]", t.triangles.len(), added.join(", "));

    let fan = build_fan(&fw, &t).expect("valid fan");
    for (i, ray) in fan.rays.iter().enumerate() {
        let label = match ray.label {
            RayLabel::Vertex(v) => fw.vertices()[v].id.clone(),
            RayLabel::Assistant => "assistant".into(),
        };
        println!("ray D{i} = {:?} ({label})", ray.generator);
    }
    for c in 0..fan.max_cones.len() {
        println!("cone {} mult {}", fan.cone_name(c), cone_mult(&fan, c).unwrap());
    }
    for (w, wall) in fan.walls.iter().enumerate() {
        let kind = match wall.kind {
            WallKind::Framework(e) => format!("framework edge {}", fw.edge_label(e)),
            WallKind::Added(..) => "added edge".into(),
            WallKind::Assistant(_) => "assistant".into(),
            WallKind::Unclassified => "unclassified".into(),
        };
        println!("wall {} mult {} {kind}", fan.wall_name(w), wall_mult(&fan, w).unwrap());
    }
    let report = validate_fan(&fan);
    println!("complete and simplicial: {} ({} directions probed)", report.is_valid(), report.directions_checked);
}
