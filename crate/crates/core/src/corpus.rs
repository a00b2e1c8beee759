//! Deterministic random planar frameworks for agreement testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlinalg::Int;
use crate::framework::{on_open_segment, orient, segments_intersect, PlanarFramework, PlanarVertex};

pub const CORPUS_SEED: u64 = 20_240_531;

/// Edge densities cycled through by [`corpus`].
pub const DENSITIES: [f64; 4] = [0.35, 0.6, 0.85, 1.0];

/// A valid planar framework with `3..=max_vertices` distinct, not all
/// collinear, points in `[-bound, bound]^2`. Each admissible segment is offered
/// in random order and kept with probability `density` unless it would cross
/// an earlier edge or pass through a vertex.
pub fn random_planar(rng: &mut impl Rng, max_vertices: usize, bound: i64, density: f64) -> PlanarFramework {
    let n = rng.gen_range(3..=max_vertices.max(3));
    let points: Vec<[Int; 2]> = loop {
        let mut pts: Vec<[Int; 2]> = Vec::new();
        while pts.len() < n {
            let p = [Int::from(rng.gen_range(-bound..=bound)), Int::from(rng.gen_range(-bound..=bound))];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let flat = (2..n).all(|c| orient(&pts[0], &pts[1], &pts[c]) == std::cmp::Ordering::Equal);
        if !flat {
            break pts;
        }
    };
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in pairs {
        if !rng.gen_bool(density) || (0..n).any(|v| on_open_segment(&points[a], &points[b], &points[v])) {
            continue;
        }
        let crosses = edges.iter().any(|&(c, d)| {
            ![c, d].contains(&a) && ![c, d].contains(&b) && segments_intersect(&points[a], &points[b], &points[c], &points[d])
        });
        if !crosses {
            edges.push((a, b));
        }
    }
    let id = |i: usize| format!("v{i}");
    let vertices = points.into_iter().enumerate().map(|(i, point)| PlanarVertex { id: id(i), point }).collect();
    PlanarFramework::new(vertices, edges.into_iter().map(|(a, b)| (id(a), id(b))).collect()).expect("generated ids are consistent")
}

/// `count` frameworks with at most 8 vertices in `[-5, 5]^2`, cycling through [`DENSITIES`].
pub fn corpus(seed: u64, count: usize) -> Vec<PlanarFramework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_planar(&mut rng, 8, 5, DENSITIES[i % DENSITIES.len()])).collect()
}
