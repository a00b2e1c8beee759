use toric_tensegrity::chow::compare_routes;
use toric_tensegrity::cli::{parse, InputDocument};
use toric_tensegrity::corpus::{corpus, CORPUS_SEED};
use toric_tensegrity::exactlinalg::{canonical_span, int, rat, rats, Rat};
use toric_tensegrity::fanbuild::TriangulationOrder;
use toric_tensegrity::framework::{self_stress_basis, Flat, IncidenceSpec, KFramework};
use toric_tensegrity::multiframe::*;
use toric_tensegrity::Error;

fn example_2_2() -> KFramework {
    match parse(include_str!("../fixtures/example_2_2.json")).unwrap() {
        InputDocument::General(g) => g.to_framework().unwrap(),
        _ => unreachable!(),
    }
}

fn flat(id: &str, point: &[i64], dirs: &[&[i64]]) -> Flat {
    Flat { id: id.into(), point: rats(point), dirs: dirs.iter().map(|d| d.iter().map(|&x| int(x)).collect()).collect() }
}

fn inc(edge: &str, face: &str, sample: &[i64]) -> IncidenceSpec {
    IncidenceSpec { edge: edge.into(), face: face.into(), sample: rats(sample), normal: None }
}

/// A point in the plane with faces (rays) leaving it in the given directions.
fn star(dirs: &[[i64; 2]]) -> KFramework {
    let faces = dirs.iter().enumerate().map(|(i, d)| flat(&format!("f{i}"), &[0, 0], &[&d[..]])).collect();
    let incs = dirs.iter().enumerate().map(|(i, d)| inc("o", &format!("f{i}"), d)).collect();
    KFramework::new(2, 1, vec![flat("o", &[0, 0], &[])], faces, incs).unwrap()
}

fn vecs(lf: &LocalFan) -> Vec<[i64; 2]> {
    lf.rays.iter().map(|r| [r.vector[0].clone().try_into().unwrap(), r.vector[1].clone().try_into().unwrap()]).collect()
}

#[test]
fn example_2_2_local_fan_at_e1() {
    let fw = example_2_2();
    let lf = local_fan(&fw, 0).unwrap();
    let mut got = vecs(&lf);
    got.sort();
    assert_eq!(got, vec![[-1, 0], [1, -1], [1, 1]]);
    assert_eq!(lf.assistant(), None);
    assert!(is_complete(&lf));
}

#[test]
fn example_2_2_glued_space() {
    let fw = example_2_2();
    let b = glued_stress_space(&fw).unwrap();
    assert_eq!(b.dim(), 1);
    let expected = canonical_span(9, &[rats(&[2, 1, 1, 1, 1, 1, 1, 1, 1])]);
    assert_eq!(b.vectors, expected);
    assert_eq!(self_stress_basis(&fw).unwrap().vectors, expected);
    assert!(theorem1_check(&fw, &b.vectors).unwrap().passed());
}

#[test]
fn theorem1_check_cases() {
    let fw = example_2_2();
    assert!(theorem1_check(&fw, &[vec![rat(0, 1); 9]]).unwrap().passed());
    let mut unit = vec![rat(0, 1); 9];
    unit[1] = rat(1, 1);
    let r = theorem1_check(&fw, &[unit]).unwrap();
    let failing: Vec<&str> = r.vectors[0].iter().filter(|b| !b.balanced).map(|b| b.edge.as_str()).collect();
    assert_eq!(failing, vec!["e1"]);
}

#[test]
fn assistant_rays() {
    let lf = local_fan(&star(&[[1, 0], [0, 1], [1, 1]]), 0).unwrap();
    let a = lf.assistant().unwrap();
    assert_eq!(vecs(&lf)[a], [-1, -1]);
    assert!(is_complete(&lf));

    let lf = local_fan(&star(&[[1, 0], [-1, 1], [-1, -1], [2, 1]]), 0).unwrap();
    assert_eq!(lf.assistant(), None);

    let lf = local_fan(&star(&[[1, 0], [-1, 0]]), 0).unwrap();
    assert_eq!(lf.assistant(), None);
    assert!(is_complete(&lf));

    let lf = local_fan(&star(&[[1, 0], [-1, 0], [0, 1]]), 0).unwrap();
    assert_eq!(vecs(&lf)[lf.assistant().unwrap()], [0, -1]);
    assert!(is_complete(&lf));
}

#[test]
fn parallel_faces_violate_genericity() {
    let fw = star(&[[1, 0], [2, 0], [0, 1]]);
    assert!(matches!(local_fan(&fw, 0), Err(Error::GenericityViolation(..))));
}

#[test]
fn higher_codimension_is_rejected() {
    // a point edge in R^3 with a line face: quotient rank 3
    let fw = KFramework::new(3, 1, vec![flat("o", &[0, 0, 0], &[])], vec![flat("f", &[0, 0, 0], &[&[1, 0, 0]])], vec![inc("o", "f", &[1, 0, 0])])
        .unwrap();
    assert_eq!(local_fan(&fw, 0), Err(Error::UnsupportedCodim { edge: "o".into(), rank: 3 }));
    assert_eq!(self_stress_basis(&fw).unwrap().dim(), 0);
}

#[test]
fn overconstrained_edge_has_no_stress() {
    let fw = star(&[[1, 0], [0, 1], [-2, 3], [5, -7]]);
    assert_eq!(glued_stress_space(&fw).unwrap().dim(), 2);
    // same four directions, but each face ends at a second point edge, pinning it
    let mut edges = vec![flat("o", &[0, 0], &[])];
    let dirs = [[1, 0], [0, 1], [-2, 3], [5, -7]];
    let mut faces = Vec::new();
    let mut incs = Vec::new();
    for (i, d) in dirs.iter().enumerate() {
        let end = [d[0] * 2, d[1] * 2];
        edges.push(flat(&format!("q{i}"), &end, &[]));
        faces.push(flat(&format!("f{i}"), &[0, 0], &[&d[..]]));
        incs.push(inc("o", &format!("f{i}"), &d[..]));
        incs.push(inc(&format!("q{i}"), &format!("f{i}"), &[0, 0]));
    }
    let fw = KFramework::new(2, 1, edges, faces, incs).unwrap();
    assert_eq!(glued_stress_space(&fw).unwrap().dim(), 0);
}

#[test]
fn planar_corpus_matches_route_a() {
    for fw in corpus(CORPUS_SEED, 30) {
        let general = fw.to_general();
        let glued = glued_stress_space(&general).unwrap();
        let direct = self_stress_basis(&fw).unwrap();
        assert_eq!(glued.vectors, canonical_span(fw.edges().len(), &direct.vectors));
        assert!(compare_routes(&fw, TriangulationOrder::Lex).unwrap().agree());
    }
}

#[test]
fn rotation_of_circular_order_is_irrelevant() {
    let a = star(&[[1, 0], [-1, 1], [-1, -1], [3, 2]]);
    let b = star(&[[-1, -1], [3, 2], [1, 0], [-1, 1]]);
    // face i of b is face perm[i] of a
    let perm = [2, 3, 0, 1];
    let sa = glued_stress_space(&a).unwrap();
    let sb = glued_stress_space(&b).unwrap();
    let moved: Vec<Vec<Rat>> = sb
        .vectors
        .iter()
        .map(|v| {
            let mut w = vec![rat(0, 1); 4];
            for (i, x) in v.iter().enumerate() {
                w[perm[i]] = x.clone();
            }
            w
        })
        .collect();
    assert_eq!(sa.dim(), 2);
    assert_eq!(canonical_span(4, &moved), sa.vectors);
}
