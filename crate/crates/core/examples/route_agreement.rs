//! Runs both routes over the random corpus under both triangulation orders.

use std::time::Instant;

use toric_tensegrity::chow::compare_routes;
use toric_tensegrity::corpus::{corpus, CORPUS_SEED};
use toric_tensegrity::fanbuild::TriangulationOrder;

fn main() {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let start = Instant::now();
    let mut dims = std::collections::BTreeMap::new();
    for (i, fw) in corpus(CORPUS_SEED, count).iter().enumerate() {
        let lex = compare_routes(fw, TriangulationOrder::Lex).expect("route comparison");
        let rev = compare_routes(fw, TriangulationOrder::RevLex).expect("route comparison");
        let ok = lex.agree() && rev.agree() && lex.route_b.dim() == rev.route_b.dim();
        *dims.entry(lex.dim()).or_insert(0) += 1;
        println!(
            "#{i:02} vertices={} edges={} dim={} lex={} revlex={} {}",
            fw.vertices().len(),
            fw.edges().len(),
            lex.dim(),
            lex.route_b.dim(),
            rev.route_b.dim(),
            if ok { "agree" } else { "DISAGREE" }
        );
    }
    println!("dimension histogram: {dims:?}");
    println!("elapsed: {:.2?}", start.elapsed());
}
