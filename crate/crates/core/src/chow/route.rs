use num_traits::Zero;
use serde::Serialize;

use super::intersect::{intersection_table, IntersectionTable};
use super::presentation::{divisor_basis, weight_of, Divisor, DivisorBasis, MinkowskiWeight};
use crate::error::Result;
use crate::exactlinalg::{canonical_span, format_rat, in_span, solve_constrained, Rat, RatMatrix};
use crate::fanbuild::{build_fan, triangulate, Fan, Triangulation, TriangulationOrder, WallKind};
use crate::framework::{balancing_matrix, self_stress_basis, Balancing, PlanarFramework, StressBasis};

/// Route B result: the constrained divisor space with its induced weights and stresses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressSpaceResult {
    pub basis: DivisorBasis,
    /// Walls on which the weight is required to vanish.
    pub vanishing_walls: Vec<usize>,
    pub divisors: Vec<Divisor>,
    pub weights: Vec<MinkowskiWeight>,
    pub stresses: StressBasis,
}

impl StressSpaceResult {
    pub fn dim(&self) -> usize {
        self.divisors.len()
    }
}

/// Divisor classes (in `basis` coordinates) whose weight vanishes on every given wall.
pub fn vanishing_divisors(fan: &Fan, table: &IntersectionTable, basis: &DivisorBasis, walls: &[usize]) -> Result<Vec<Divisor>> {
    let rows: Vec<Vec<Rat>> = walls.iter().map(|&w| basis.kept.iter().map(|&r| table.get(r, w).clone()).collect()).collect();
    let space = solve_constrained(basis.kept.len(), &RatMatrix::from_rows(basis.kept.len(), &rows)?)?;
    Ok(space.basis.iter().map(|c| basis.divisor(fan.rays.len(), c)).collect())
}

/// Route B on a built fan: impose vanishing on added and assistant walls, read
/// the stress off the framework walls.
pub fn constrained_stress_space(fw: &PlanarFramework, fan: &Fan) -> Result<StressSpaceResult> {
    let table = intersection_table(fan)?;
    let basis = divisor_basis(fan)?;
    let vanishing_walls = fan.walls_of_kind(|k| matches!(k, WallKind::Added(..) | WallKind::Assistant(_)));
    let divisors = vanishing_divisors(fan, &table, &basis, &vanishing_walls)?;
    let weights: Vec<MinkowskiWeight> = divisors.iter().map(|d| weight_of(d, &table)).collect();

    let mut edge_wall = vec![None; fw.edges().len()];
    for (w, wall) in fan.walls.iter().enumerate() {
        if let WallKind::Framework(e) = wall.kind {
            edge_wall[e] = Some(w);
        }
    }
    let raw: Vec<Vec<Rat>> = weights
        .iter()
        .map(|c| edge_wall.iter().map(|w| w.map_or_else(Rat::zero, |w| c.values[w].clone())).collect())
        .collect();
    let stresses = StressBasis { labels: fw.stress_labels(), vectors: canonical_span(fw.edges().len(), &raw) };
    Ok(StressSpaceResult { basis, vanishing_walls, divisors, weights, stresses })
}

/// Triangulate, build the fan and run Route B.
pub fn route_b(fw: &PlanarFramework, order: TriangulationOrder) -> Result<(Triangulation, Fan, StressSpaceResult)> {
    let t = triangulate(fw, order)?;
    let fan = build_fan(fw, &t)?;
    let r = constrained_stress_space(fw, &fan)?;
    Ok((t, fan, r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `"a"` for a Route A vector missing from Route B, `"b"` for the reverse.
    pub route: String,
    pub index: usize,
    pub vector: Vec<String>,
    /// Balancing matrix applied to the vector.
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteComparison {
    pub route_a: StressBasis,
    pub route_b: StressSpaceResult,
    pub witnesses: Vec<Witness>,
}

impl RouteComparison {
    pub fn agree(&self) -> bool {
        self.route_a.dim() == self.route_b.stresses.dim() && self.witnesses.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.route_a.dim()
    }
}

/// Runs both routes and checks that their stress spaces coincide by mutual membership.
pub fn compare_routes_on(fw: &PlanarFramework, fan: &Fan) -> Result<RouteComparison> {
    let route_a = self_stress_basis(fw)?;
    let route_b = constrained_stress_space(fw, fan)?;
    let a = balancing_matrix(fw)?;
    let m = fw.edges().len();
    let mut witnesses = Vec::new();
    let mut check = |route: &str, from: &[Vec<Rat>], into: &[Vec<Rat>]| -> Result<()> {
        for (i, v) in from.iter().enumerate() {
            if !in_span(m, into, v) {
                witnesses.push(Witness {
                    route: route.into(),
                    index: i,
                    vector: v.iter().map(format_rat).collect(),
                    residual: a.mul_vec(v)?.iter().map(format_rat).collect(),
                });
            }
        }
        Ok(())
    };
    check("a", &route_a.vectors, &route_b.stresses.vectors)?;
    check("b", &route_b.stresses.vectors, &route_a.vectors)?;
    Ok(RouteComparison { route_a, route_b, witnesses })
}

pub fn compare_routes(fw: &PlanarFramework, order: TriangulationOrder) -> Result<RouteComparison> {
    let fan = build_fan(fw, &triangulate(fw, order)?)?;
    compare_routes_on(fw, &fan)
}
