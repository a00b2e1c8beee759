//! A 2-framework in space: local fans at each edge, the glued linear system,
//! and the edge-by-edge balancing check of the result.

use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::exactlinalg::format_rat;
use toric_tensegrity::framework::self_stress_basis;
use toric_tensegrity::multiframe::{glued_stress_space, glued_system, is_complete, theorem1_check, LocalRayLabel};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/example_2_2.json").into());
    let InputDocument::General(doc) = parse(&std::fs::read_to_string(&path).expect("readable input")).expect("well-formed input") else {
        panic!("{path} is not a general framework");
    };
    let fw = doc.to_framework().expect("consistent framework");

    let sys = glued_system(&fw).expect("codimension-two edges");
    for lf in &sys.local_fans {
        let rays: Vec<String> = lf
            .rays
            .iter()
            .map(|r| {
                let who = match r.label {
                    LocalRayLabel::Face(f) => fw.faces()[f].id.clone(),
                    LocalRayLabel::Assistant => "assistant".into(),
                };
                format!("{who}({}, {})", r.vector[0], r.vector[1])
            })
            .collect();
        println!("edge {}: {} complete={}", fw.edges()[lf.edge].id, rays.join(" "), is_complete(lf));
    }
    println!(
        "glued system: {} unknowns ({} faces, {} assistants), {} equations",
        sys.unknowns(),
        sys.faces,
        sys.assistants.len(),
        sys.equations.rows()
    );

    let glued = glued_stress_space(&fw).unwrap();
    let direct = self_stress_basis(&fw).unwrap();
    println!("glued dimension {}, direct dimension {}, equal: {}", glued.dim(), direct.dim(), glued.vectors == direct.vectors);
    for i in 0..glued.dim() {
        let parts: Vec<String> = glued.entries(i).map(|(f, w)| format!("{f}={}", format_rat(w))).collect();
        println!("  {}", parts.join(" "));
    }
    println!("balanced at every edge: {}", theorem1_check(&fw, &glued.vectors).unwrap().passed());
}
