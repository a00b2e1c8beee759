use toric_tensegrity::chow::constrained_stress_space;
use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::corpus::{corpus, CORPUS_SEED};
use toric_tensegrity::exactlinalg::{ints, Int};
use toric_tensegrity::fanbuild::*;
use toric_tensegrity::framework::PlanarFramework;
use toric_tensegrity::Error;

fn planar(name: &str) -> PlanarFramework {
    let text = std::fs::read_to_string(format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
    match parse(&text).unwrap() {
        InputDocument::Planar(p) => p.to_framework().unwrap(),
        _ => unreachable!(),
    }
}

fn fan(fw: &PlanarFramework, order: TriangulationOrder) -> (Triangulation, Fan) {
    let t = triangulate(fw, order).unwrap();
    let f = build_fan(fw, &t).unwrap();
    (t, f)
}

#[test]
fn lifts_and_assistant_rays() {
    let fw = planar("example_3_5a");
    let rays = lift(&fw);
    assert_eq!(rays[0].generator, ints(&[1, 2, 1]));
    assert_eq!(rays[2].generator, ints(&[-1, -1, 1]));
    assert_eq!(rays[4].generator, ints(&[0, 0, 1]));
    assert_eq!(assistant_ray(&rays).unwrap().generator, ints(&[-1, -1, -5]));
    let fw = planar("example_3_5b");
    assert_eq!(assistant_ray(&lift(&fw)).unwrap().generator, ints(&[-3, -1, -6]));
}

#[test]
fn example_3_5a_fan() {
    let fw = planar("example_3_5a");
    let (t, f) = fan(&fw, TriangulationOrder::Lex);
    assert!(t.added_edges.is_empty());
    assert_eq!((f.rays.len(), f.walls.len(), f.max_cones.len()), (6, 12, 8));
    let names: Vec<String> = (0..12).map(|w| f.wall_name(w)).collect();
    assert_eq!(names, ["t01", "t02", "t03", "t04", "t12", "t23", "t34", "t41", "t15", "t25", "t35", "t45"]);
    let report = validate_fan(&f);
    assert!(report.is_valid(), "{}", report.summary());
    assert!(report.directions_checked >= COMPLETENESS_SAMPLES);
}

#[test]
fn example_3_5b_triangulations() {
    let fw = planar("example_3_5b");
    let reference = triangulate_with(&fw, &[(0, 4), (3, 4)]).unwrap();
    assert_eq!(reference.added_edges, vec![(0, 4), (3, 4)]);
    let rev = triangulate(&fw, TriangulationOrder::RevLex).unwrap();
    assert_eq!(rev.added_edges, vec![(0, 4), (3, 4)]);
    let lex = triangulate(&fw, TriangulationOrder::Lex).unwrap();
    assert_eq!(lex.added_edges, vec![(1, 5), (2, 5)]);
}

#[test]
fn square_gets_one_added_diagonal() {
    let fw = PlanarFramework::from_points(&[("a", 0, 0), ("b", 1, 0), ("c", 1, 1), ("d", 0, 1)], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        .unwrap();
    for order in [TriangulationOrder::Lex, TriangulationOrder::RevLex] {
        let (t, f) = fan(&fw, order);
        assert_eq!(t.added_edges.len(), 1);
        assert_eq!(f.walls_of_kind(|k| matches!(k, WallKind::Added(..))).len(), 1);
    }
}

#[test]
fn collinear_input_has_no_hull() {
    let fw = PlanarFramework::from_points(&[("a", 0, 0), ("b", 1, 1), ("c", 2, 2)], &[("a", "b")]).unwrap();
    assert_eq!(triangulate(&fw, TriangulationOrder::Lex), Err(Error::DegenerateHull));
}

#[test]
fn structural_invariants_over_corpus() {
    for fw in corpus(CORPUS_SEED, 50) {
        for order in [TriangulationOrder::Lex, TriangulationOrder::RevLex] {
            let (t, f) = fan(&fw, order);
            let h = t.hull.len();
            assert_eq!(f.max_cones.len(), t.triangles.len() + h);
            assert_eq!(f.walls.len(), t.edges.len() + h);
            assert!(f.walls.iter().all(|w| w.cones.len() == 2));
            let framework = f.walls_of_kind(|k| matches!(k, WallKind::Framework(_))).len();
            let added = f.walls_of_kind(|k| matches!(k, WallKind::Added(..))).len();
            let assistant = f.walls_of_kind(|k| matches!(k, WallKind::Assistant(_))).len();
            assert_eq!(framework, fw.edges().len());
            assert_eq!(framework + added + assistant, f.walls.len());
            assert_eq!(added, t.added_edges.len());
            for e in fw.edges() {
                assert!(t.has_edge(e.0, e.1));
            }
            let v0 = f.assistant().unwrap();
            for (i, r) in f.rays.iter().enumerate() {
                if i == v0 {
                    assert!(r.generator[2] < Int::from(0));
                } else {
                    assert_eq!(r.generator[2], Int::from(1));
                }
            }
            assert!(validate_fan(&f).is_valid());
        }
    }
}

#[test]
fn stress_dimension_is_triangulation_independent() {
    for fw in corpus(CORPUS_SEED, 50) {
        let (_, lex) = fan(&fw, TriangulationOrder::Lex);
        let (_, rev) = fan(&fw, TriangulationOrder::RevLex);
        assert_eq!(constrained_stress_space(&fw, &lex).unwrap().dim(), constrained_stress_space(&fw, &rev).unwrap().dim());
    }
}

#[test]
fn removed_assistant_cone_leaves_a_witness() {
    let fw = planar("example_3_5a");
    let (_, f) = fan(&fw, TriangulationOrder::Lex);
    let mut cones = f.max_cones.clone();
    let removed = cones.remove(3);
    let broken = Fan::from_cones(f.rays.clone(), cones);
    let r = validate_fan(&broken);
    assert!(!r.is_valid());
    assert_eq!(r.wall_failures.len(), 3);
    assert!(r.completeness_failures.iter().any(|c| c.containing == 0));
    assert!(removed.contains_ray(0));
}

#[test]
fn duplicated_cone_fails_wall_condition() {
    let fw = planar("example_3_5a");
    let (_, f) = fan(&fw, TriangulationOrder::Lex);
    let mut cones = f.max_cones.clone();
    cones.push(cones[5].clone());
    let r = validate_fan(&Fan::from_cones(f.rays.clone(), cones));
    assert!(r.wall_failures.iter().all(|w| w.cone_count == 3));
    assert!(r.completeness_failures.iter().any(|c| c.interior > 1));
}

#[test]
fn collinear_hull_points_become_rays() {
    let fw = PlanarFramework::from_points(&[("a", 0, 0), ("m", 2, 0), ("b", 4, 0), ("c", 2, 3)], &[("a", "m"), ("m", "b"), ("b", "c"), ("c", "a"), ("m", "c")])
        .unwrap();
    let (t, f) = fan(&fw, TriangulationOrder::Lex);
    assert_eq!(t.hull.len(), 4);
    assert_eq!(f.rays.len(), 5);
    assert!(validate_fan(&f).is_valid());
}
