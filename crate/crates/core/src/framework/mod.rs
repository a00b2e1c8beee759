//! Framework data models, validation, and the direct balancing route to the
//! self-stress space.

mod general;
mod planar;

use std::fmt;

use serde::Serialize;

use crate::exactlinalg::{kernel_basis, RatMatrix, RatVector};
use crate::error::Result;

pub use general::{
    incidence_normal, quotient_map, validate_general, Flat, Incidence, IncidenceNormal, IncidenceSpec, KFramework, QuotientMap,
};
pub(crate) use general::{normal_with_map, same_ray};
pub(crate) use planar::{on_open_segment, segments_intersect};
pub use planar::{orient, validate_planar, PlanarFramework, PlanarVertex};

/// A single validation finding with enough context to locate it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    DuplicatePoint { a: String, b: String },
    Loop { vertex: String },
    RepeatedEdge { edge: String },
    SegmentsCross { first: String, second: String },
    VertexOnEdge { vertex: String, edge: String },
    LowDegree { vertex: String, degree: usize },
    Shape { item: String, detail: String },
    DegenerateFlat { item: String },
    EdgeNotInFace { edge: String, face: String },
    SampleNotOnFace { edge: String, face: String },
    SampleOnEdge { edge: String, face: String },
    RepeatedIncidence { edge: String, face: String },
    FewIncidences { edge: String, count: usize },
    BadNormal { edge: String, face: String, detail: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::DuplicatePoint { a, b } => write!(f, "vertices {a} and {b} share a point"),
            Issue::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Issue::RepeatedEdge { edge } => write!(f, "edge {edge} is repeated"),
            Issue::SegmentsCross { first, second } => write!(f, "segments {first} and {second} intersect away from a shared endpoint"),
            Issue::VertexOnEdge { vertex, edge } => write!(f, "vertex {vertex} lies in the interior of edge {edge}"),
            Issue::LowDegree { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Issue::Shape { item, detail } => write!(f, "{item}: {detail}"),
            Issue::DegenerateFlat { item } => write!(f, "{item} has linearly dependent directions"),
            Issue::EdgeNotInFace { edge, face } => write!(f, "edge {edge} is not contained in face {face}"),
            Issue::SampleNotOnFace { edge, face } => write!(f, "sample of ({edge}, {face}) is not on the face"),
            Issue::SampleOnEdge { edge, face } => write!(f, "sample of ({edge}, {face}) lies on the edge"),
            Issue::RepeatedIncidence { edge, face } => write!(f, "incidence ({edge}, {face}) is repeated"),
            Issue::FewIncidences { edge, count } => write!(f, "edge {edge} has {count} incident faces"),
            Issue::BadNormal { edge, face, detail } => write!(f, "normal of ({edge}, {face}): {detail}"),
        }
    }
}

/// Validation outcome: failures make a framework unusable, warnings do not.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<Issue>,
    pub warnings: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A basis of self-stresses, each a rational value per labeled stress carrier
/// (planar edges or general faces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressBasis {
    pub labels: Vec<String>,
    pub vectors: Vec<RatVector>,
}

impl StressBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_tensegrity(&self) -> bool {
        !self.vectors.is_empty()
    }

    pub fn entries(&self, i: usize) -> impl Iterator<Item = (&str, &crate::exactlinalg::Rat)> {
        self.labels.iter().map(String::as_str).zip(self.vectors[i].iter())
    }
}

/// Anything that yields the balancing system of a framework: one column per
/// stress carrier, one row per (edge, quotient coordinate).
pub trait Balancing {
    fn stress_labels(&self) -> Vec<String>;
    fn balancing_matrix(&self) -> Result<RatMatrix>;
}

pub fn balancing_matrix<F: Balancing + ?Sized>(fw: &F) -> Result<RatMatrix> {
    fw.balancing_matrix()
}

/// The self-stress space as the canonical kernel basis of the balancing matrix.
/// An empty basis means the framework is not a tensegrity.
pub fn self_stress_basis<F: Balancing + ?Sized>(fw: &F) -> Result<StressBasis> {
    let a = fw.balancing_matrix()?;
    Ok(StressBasis { labels: fw.stress_labels(), vectors: kernel_basis(&a) })
}
