//! Route B: multiplicities, intersection numbers, the linear-relation
//! presentation of `A^1`, Minkowski weights and the constrained stress solve.

mod intersect;
mod presentation;
mod route;

pub use intersect::{
    assistant_wall_intersection, cone_mult, intersect, intersect_from_side, intersection_table, mult, multiplicity_table, ray_name,
    wall_mult, wall_relation, wall_relation_from_side, IntersectionTable, MultiplicityRow, WallRelation,
};
pub use presentation::{
    check_minkowski, divisor_basis, linear_relations, sr_minimal_nonfaces, weight_of, Divisor, DivisorBasis, MinkowskiReport,
    MinkowskiWeight, RayBalance,
};
pub use route::{
    compare_routes, compare_routes_on, constrained_stress_space, route_b, vanishing_divisors, RouteComparison, StressSpaceResult, Witness,
};
