//! Planar triangulations and the complete fan over their lifted points.

mod fan;
mod triangulate;

pub use fan::{
    assistant_ray, build_fan, lift, validate_fan, CompletenessFailure, Cone, Fan, FanReport, Ray, RayLabel, Wall, WallFailure,
    WallKind, COMPLETENESS_SAMPLES, COMPLETENESS_SEED,
};
pub use triangulate::{triangulate, triangulate_with, Triangulation, TriangulationOrder};
