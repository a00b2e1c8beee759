use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::triangulate::{lifted, Triangulation};
use crate::error::{Error, Result};
use crate::exactlinalg::{primitive, Int, IntVector};
use crate::framework::PlanarFramework;

pub const COMPLETENESS_SEED: u64 = 0x7e45_e641;
pub const COMPLETENESS_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RayLabel {
    /// Lift of the framework vertex with this index.
    Vertex(usize),
    Assistant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub generator: IntVector,
    pub label: RayLabel,
}

/// Simplicial cone given by sorted ray indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    pub rays: Vec<usize>,
}

impl Cone {
    pub fn new(mut rays: Vec<usize>) -> Self {
        rays.sort_unstable();
        Self { rays }
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn contains_ray(&self, r: usize) -> bool {
        self.rays.contains(&r)
    }
}

/// Where a wall of the planar fan comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WallKind {
    /// Cone over the framework edge with this index.
    Framework(usize),
    /// Cone over a triangulation edge that is not a framework edge (vertex indices).
    Added(usize, usize),
    /// `Cone{v0, v_i}` for the hull vertex with this index.
    Assistant(usize),
    /// Wall of a fan assembled from raw cones.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// Ray indices, in display order (hull walls follow the hull cycle).
    pub rays: [usize; 2],
    /// Maximal cones containing the wall; exactly two in a valid fan.
    pub cones: Vec<usize>,
    pub kind: WallKind,
}

impl Wall {
    pub fn cone(&self) -> Cone {
        Cone::new(self.rays.to_vec())
    }
}

/// A complete simplicial fan in a rank-3 lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub rays: Vec<Ray>,
    pub max_cones: Vec<Cone>,
    pub walls: Vec<Wall>,
    /// Hull cycle as ray indices (counterclockwise, starting at the lexicographically smallest point).
    pub hull: Vec<usize>,
}

impl Fan {
    /// Assembles a fan from rays and maximal cones without validating it; walls
    /// are every pair of rays lying in some maximal cone.
    pub fn from_cones(rays: Vec<Ray>, max_cones: Vec<Cone>) -> Self {
        let mut walls: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (ci, c) in max_cones.iter().enumerate() {
            for i in 0..c.rays.len() {
                for j in i + 1..c.rays.len() {
                    walls.entry([c.rays[i], c.rays[j]]).or_default().push(ci);
                }
            }
        }
        let walls = walls.into_iter().map(|(rays, cones)| Wall { rays, cones, kind: WallKind::Unclassified }).collect();
        Self { rays, max_cones, walls, hull: vec![] }
    }

    pub fn generator(&self, r: usize) -> &[Int] {
        &self.rays[r].generator
    }

    pub fn assistant(&self) -> Option<usize> {
        self.rays.iter().position(|r| r.label == RayLabel::Assistant)
    }

    pub fn ray_of_vertex(&self, v: usize) -> Option<usize> {
        self.rays.iter().position(|r| r.label == RayLabel::Vertex(v))
    }

    pub fn wall_between(&self, a: usize, b: usize) -> Option<usize> {
        self.walls.iter().position(|w| (w.rays == [a, b]) || (w.rays == [b, a]))
    }

    pub fn walls_of_kind(&self, pred: impl Fn(&WallKind) -> bool) -> Vec<usize> {
        (0..self.walls.len()).filter(|&w| pred(&self.walls[w].kind)).collect()
    }

    /// Ray of a maximal cone that is not on the given wall.
    pub fn opposite_ray(&self, cone: usize, wall: usize) -> usize {
        let w = &self.walls[wall].rays;
        *self.max_cones[cone].rays.iter().find(|r| !w.contains(r)).expect("maximal cone has three rays")
    }

    fn index_label(&self, idx: &[usize]) -> String {
        if idx.iter().all(|&i| i < 10) {
            idx.iter().map(|i| i.to_string()).collect()
        } else {
            idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// `t01`, `t41`, ... following the wall's display order.
    pub fn wall_name(&self, wall: usize) -> String {
        format!("t{}", self.index_label(&self.walls[wall].rays))
    }

    /// `s012`, `s415`, ...: hull-adjacent cones list the hull edge in cycle order first.
    pub fn cone_name(&self, cone: usize) -> String {
        let rays = &self.max_cones[cone].rays;
        let h = self.hull.len();
        for i in 0..h {
            let (a, b) = (self.hull[i], self.hull[(i + 1) % h]);
            if rays.contains(&a) && rays.contains(&b) {
                let c = *rays.iter().find(|&&r| r != a && r != b).expect("three rays");
                let order = if Some(c) == self.assistant() { vec![c, a, b] } else { vec![a, b, c] };
                return format!("s{}", self.index_label(&order));
            }
        }
        format!("s{}", self.index_label(rays))
    }
}

/// One ray `(p_i, 1)` per framework vertex, in vertex order.
pub fn lift(fw: &PlanarFramework) -> Vec<Ray> {
    fw.vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| Ray { generator: lifted(&v.point), label: RayLabel::Vertex(i) })
        .collect()
}

/// `primitive(-sum of generators)`, labeled as the assistant ray.
pub fn assistant_ray(rays: &[Ray]) -> Result<Ray> {
    let dim = rays.first().map_or(3, |r| r.generator.len());
    let mut sum = vec![Int::zero(); dim];
    for r in rays {
        for (s, x) in sum.iter_mut().zip(&r.generator) {
            *s -= x;
        }
    }
    Ok(Ray { generator: primitive(&sum)?, label: RayLabel::Assistant })
}

/// The complete fan over the triangulation: ray 0 is the assistant ray, ray
/// `i + 1` lifts vertex `i`. Maximal cones are the cones over triangles plus
/// `Cone{v0, v_i, v_j}` for every hull edge.
pub fn build_fan(fw: &PlanarFramework, t: &Triangulation) -> Result<Fan> {
    let vertex_rays = lift(fw);
    let v0 = assistant_ray(&vertex_rays)?;
    let mut rays = vec![v0];
    rays.extend(vertex_rays);
    let ray = |v: usize| v + 1;
    let h = t.hull.len();

    // canonical hull order for naming: the cycle rotated to its smallest ray index
    let start = (0..h).min_by_key(|&i| t.hull[i]).unwrap_or(0);
    let hull: Vec<usize> = (0..h).map(|i| ray(t.hull[(start + i) % h])).collect();

    let mut max_cones: Vec<Cone> = (0..h).map(|i| Cone::new(vec![0, hull[i], hull[(i + 1) % h]])).collect();
    let mut inner: Vec<Cone> = t.triangles.iter().map(|tr| Cone::new(tr.iter().map(|&v| ray(v)).collect())).collect();
    let hull_edge_pos = |c: &Cone| (0..h).find(|&i| c.contains_ray(hull[i]) && c.contains_ray(hull[(i + 1) % h]));
    inner.sort_by_key(|c| (hull_edge_pos(c).unwrap_or(usize::MAX), c.clone()));
    max_cones.extend(inner);

    let raw = Fan::from_cones(rays.clone(), max_cones.clone());
    let lookup: BTreeMap<[usize; 2], Vec<usize>> = raw.walls.into_iter().map(|w| (w.rays, w.cones)).collect();
    let cones_of = |a: usize, b: usize| lookup.get(&[a.min(b), a.max(b)]).cloned().unwrap_or_default();
    let kind_of = |a: usize, b: usize| match fw.find_edge(a - 1, b - 1) {
        Some(e) => WallKind::Framework(e),
        None => WallKind::Added((a - 1).min(b - 1), (a - 1).max(b - 1)),
    };

    let mut walls = Vec::new();
    let mut assistant_walls: Vec<usize> = hull.clone();
    assistant_walls.sort_unstable();
    for v in assistant_walls {
        walls.push(Wall { rays: [0, v], cones: cones_of(0, v), kind: WallKind::Assistant(v - 1) });
    }
    for i in 0..h {
        let (a, b) = (hull[i], hull[(i + 1) % h]);
        walls.push(Wall { rays: [a, b], cones: cones_of(a, b), kind: kind_of(a, b) });
    }
    let on_hull = |a: usize, b: usize| (0..h).any(|i| {
        let (x, y) = (hull[i], hull[(i + 1) % h]);
        (x, y) == (a, b) || (x, y) == (b, a)
    });
    for &(a, b) in &t.edges {
        let (a, b) = (ray(a), ray(b));
        if !on_hull(a, b) {
            walls.push(Wall { rays: [a, b], cones: cones_of(a, b), kind: kind_of(a, b) });
        }
    }

    let fan = Fan { rays, max_cones, walls, hull };
    let report = validate_fan(&fan);
    if !report.is_valid() {
        return Err(Error::FanInvalid(report.summary()));
    }
    Ok(fan)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallFailure {
    pub rays: [usize; 2],
    pub cone_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessFailure {
    pub direction: Vec<String>,
    pub containing: usize,
    pub interior: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub non_simplicial: Vec<usize>,
    pub wall_failures: Vec<WallFailure>,
    pub completeness_failures: Vec<CompletenessFailure>,
    pub directions_checked: usize,
}

impl FanReport {
    pub fn is_valid(&self) -> bool {
        self.non_simplicial.is_empty() && self.wall_failures.is_empty() && self.completeness_failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.non_simplicial.is_empty() {
            parts.push(format!("non-simplicial cones {:?}", self.non_simplicial));
        }
        for w in &self.wall_failures {
            parts.push(format!("wall {:?} lies in {} maximal cones", w.rays, w.cone_count));
        }
        if let Some(c) = self.completeness_failures.first() {
            parts.push(format!(
                "direction ({}) lies in {} cones ({} interiors)",
                c.direction.join(", "),
                c.containing,
                c.interior
            ));
        }
        parts.join("; ")
    }
}

pub(crate) fn det3(a: &[Int], b: &[Int], c: &[Int]) -> Int {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0]) + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

fn cross(a: &[Int], b: &[Int]) -> [Int; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

/// Membership test for a full-dimensional simplicial cone: the barycentric
/// coordinates of `x` are its dot products with the cofactor rows, scaled by
/// the sign of the determinant.
struct ConeTest {
    cofactors: [[Int; 3]; 3],
    positive: bool,
}

impl ConeTest {
    fn new(g: [&[Int]; 3]) -> Self {
        let cofactors = [cross(g[1], g[2]), cross(g[2], g[0]), cross(g[0], g[1])];
        Self { positive: det3(g[0], g[1], g[2]).is_positive(), cofactors }
    }

    /// (in the closed cone, in the open cone)
    fn classify(&self, x: &[Int]) -> (bool, bool) {
        let mut open = true;
        for c in &self.cofactors {
            let t = &c[0] * &x[0] + &c[1] * &x[1] + &c[2] * &x[2];
            if t.is_zero() {
                open = false;
            } else if t.is_positive() != self.positive {
                return (false, false);
            }
        }
        (true, open)
    }
}

#[cfg(test)]
fn membership(gens: [&[Int]; 3], x: &[Int]) -> (bool, bool) {
    ConeTest::new(gens).classify(x)
}

/// Checks simpliciality, that every wall lies in exactly two maximal cones
/// (recounted from the maximal cones), and samples directions for coverage.
/// Besides the pseudorandom directions, each wall with a single adjacent cone
/// is probed just across itself, so a missing cone always yields a witness.
pub fn validate_fan(fan: &Fan) -> FanReport {
    let mut report = FanReport::default();
    for (i, c) in fan.max_cones.iter().enumerate() {
        let ok = c.rays.len() == 3 && !det3(fan.generator(c.rays[0]), fan.generator(c.rays[1]), fan.generator(c.rays[2])).is_zero();
        if !ok {
            report.non_simplicial.push(i);
        }
    }

    let recount = Fan::from_cones(fan.rays.clone(), fan.max_cones.clone());
    let mut probes: Vec<IntVector> = Vec::new();
    for w in &recount.walls {
        if w.cones.len() != 2 {
            report.wall_failures.push(WallFailure { rays: w.rays, cone_count: w.cones.len() });
        }
        if w.cones.len() == 1 {
            let c = &fan.max_cones[w.cones[0]];
            if let Some(&third) = c.rays.iter().find(|r| !w.rays.contains(r)) {
                let k = Int::from(1000);
                let (a, b, t) = (fan.generator(w.rays[0]), fan.generator(w.rays[1]), fan.generator(third));
                probes.push((0..3).map(|i| (&a[i] + &b[i]) * &k - &t[i]).collect());
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(COMPLETENESS_SEED);
    while probes.len() < COMPLETENESS_SAMPLES + report.wall_failures.len() {
        let v: IntVector = (0..3).map(|_| Int::from(rng.gen_range(-1000i64..=1000))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            probes.push(v);
        }
    }

    let tests: Vec<ConeTest> = fan
        .max_cones
        .iter()
        .enumerate()
        .filter(|(i, _)| !report.non_simplicial.contains(i))
        .map(|(_, c)| ConeTest::new([fan.generator(c.rays[0]), fan.generator(c.rays[1]), fan.generator(c.rays[2])]))
        .collect();
    for x in &probes {
        let (mut containing, mut interior) = (0, 0);
        for t in &tests {
            let (closed, open) = t.classify(x);
            containing += closed as usize;
            interior += open as usize;
        }
        if containing == 0 || interior > 1 {
            report.completeness_failures.push(CompletenessFailure {
                direction: x.iter().map(|c| c.to_string()).collect(),
                containing,
                interior,
            });
        }
    }
    report.directions_checked = probes.len();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::ints;
    use crate::fanbuild::{triangulate, TriangulationOrder};

    fn triangle() -> PlanarFramework {
        PlanarFramework::from_points(&[("a", 0, 0), ("b", 1, 0), ("c", 0, 1)], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    #[test]
    fn lift_examples() {
        let fw = PlanarFramework::from_points(&[("a", 1, 2), ("b", 0, 0), ("c", -1, -1)], &[]).unwrap();
        let g: Vec<_> = lift(&fw).into_iter().map(|r| r.generator).collect();
        assert_eq!(g, vec![ints(&[1, 2, 1]), ints(&[0, 0, 1]), ints(&[-1, -1, 1])]);
    }

    #[test]
    fn assistant_of_single_vertex() {
        let fw = PlanarFramework::from_points(&[("a", 0, 0)], &[]).unwrap();
        assert_eq!(assistant_ray(&lift(&fw)).unwrap().generator, ints(&[0, 0, -1]));
    }

    #[test]
    fn triangle_fan_counts() {
        let fw = triangle();
        let t = triangulate(&fw, TriangulationOrder::Lex).unwrap();
        let fan = build_fan(&fw, &t).unwrap();
        assert_eq!((fan.rays.len(), fan.walls.len(), fan.max_cones.len()), (4, 6, 4));
        assert!(fan.walls.iter().all(|w| w.cones.len() == 2));
    }

    #[test]
    fn removed_cone_has_witness() {
        let fw = triangle();
        let fan = build_fan(&fw, &triangulate(&fw, TriangulationOrder::Lex).unwrap()).unwrap();
        let mut cones = fan.max_cones.clone();
        let removed = cones.remove(0);
        let broken = Fan::from_cones(fan.rays.clone(), cones);
        let r = validate_fan(&broken);
        assert!(!r.wall_failures.is_empty());
        let w = &r.completeness_failures[0];
        assert_eq!(w.containing, 0);
        // the witness lies in the removed cone
        let x: IntVector = w.direction.iter().map(|s| s.parse().unwrap()).collect();
        let g = |i: usize| fan.generator(removed.rays[i]);
        assert!(membership([g(0), g(1), g(2)], &x).0);
    }

    #[test]
    fn duplicated_cone_breaks_wall_condition() {
        let fw = triangle();
        let fan = build_fan(&fw, &triangulate(&fw, TriangulationOrder::Lex).unwrap()).unwrap();
        let mut cones = fan.max_cones.clone();
        cones.push(cones[0].clone());
        let r = validate_fan(&Fan::from_cones(fan.rays.clone(), cones));
        assert!(r.wall_failures.iter().all(|w| w.cone_count == 3));
        assert_eq!(r.wall_failures.len(), 3);
        assert!(!r.is_valid());
    }
}
