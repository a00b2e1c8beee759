//! Route B end to end: constrained divisor classes, their weights on walls, and
//! the balancing check at every ray.

use toric_tensegrity::chow::{check_minkowski, compare_routes_on, intersection_table, weight_of, Divisor};
use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::exactlinalg::{format_rat, rat};
use toric_tensegrity::fanbuild::{build_fan, triangulate, TriangulationOrder};

fn main() {
    for name in ["example_3_5a", "example_3_5b"] {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let InputDocument::Planar(doc) = parse(&std::fs::read_to_string(&path).unwrap()).unwrap() else { unreachable!() };
        let fw = doc.to_framework().unwrap();
        let fan = build_fan(&fw, &triangulate(&fw, TriangulationOrder::Lex).unwrap()).unwrap();
        let cmp = compare_routes_on(&fw, &fan).unwrap();
        println!("{name}: constrained dimension {}, routes agree: {}", cmp.route_b.dim(), cmp.agree());
        for (d, w) in cmp.route_b.divisors.iter().zip(&cmp.route_b.weights) {
            println!("  divisor {}", d.render());
            let values: Vec<String> = (0..fan.walls.len()).map(|i| format!("{}={}", fan.wall_name(i), format_rat(&w.values[i]))).collect();
            println!("  weight {}", values.join(" "));
            println!("  balanced at every ray: {}", check_minkowski(&fan, w).unwrap().is_balanced());
        }

        // a lone vertex divisor is balanced as a class but fails the vanishing constraints
        let table = intersection_table(&fan).unwrap();
        let probe = Divisor::ray(fan.rays.len(), 1);
        let w = weight_of(&probe, &table);
        let report = check_minkowski(&fan, &w).unwrap();
        let nonzero = cmp.route_b.vanishing_walls.iter().filter(|&&i| w.values[i] != rat(0, 1)).count();
        println!("  {} balanced: {}, nonzero on {nonzero} constrained walls", probe.render(), report.is_balanced());
    }
}
