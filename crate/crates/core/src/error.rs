use thiserror::Error;

/// Errors raised by the exact linear algebra, framework, fan and Chow layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("rows are linearly dependent over Q")]
    DependentRays,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{0}` has a degenerate direction basis")]
    DegenerateEdge(String),
    #[error("sample point of incidence ({edge}, {face}) lies on the edge")]
    SampleOnEdge { edge: String, face: String },
    #[error("framework failed validation: {0}")]
    InvalidFramework(String),

    #[error("all vertices are collinear (or fewer than three vertices); no 2-dimensional hull")]
    DegenerateHull,
    #[error("fan is invalid: {0}")]
    FanInvalid(String),
    #[error("cone {0:?} is not a wall with exactly two adjacent maximal cones")]
    NotAWall(Vec<usize>),
    #[error("fan rays do not span the ambient space")]
    DegenerateFan,

    #[error("edge `{edge}` has quotient rank {rank}; local fans need rank 2")]
    UnsupportedCodim { edge: String, rank: usize },
    #[error("genericity violated at edge `{0}`: {1}")]
    GenericityViolation(String, String),
    #[error("glued system and balancing route disagree: {0}")]
    Theorem1Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
