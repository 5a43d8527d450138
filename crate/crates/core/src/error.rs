use thiserror::Error;

/// Errors raised by the geometric constructions and checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("invalid circle: {0}")]
    InvalidCircle(&'static str),
    #[error("degenerate line: endpoints coincide")]
    DegenerateLine,
    #[error("degenerate ray: arm shorter than tolerance")]
    DegenerateRay,

    #[error("vertex count {0} is below 3")]
    InvalidN(usize),
    #[error("circumradius {0} must be positive and finite")]
    InvalidRadius(f64),
    #[error("shared vertex coincides with the centroid")]
    CoincidentVertexCentroid,
    #[error("side endpoints coincide")]
    DegenerateSide,
    #[error("point is not on the circumcircle (off by {offset:e}, radius {radius})")]
    NotOnCircumcircle { offset: f64, radius: f64 },

    #[error("power-sum order {m} outside 1..={max}")]
    OrderOutOfRange { m: usize, max: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("polygons have different vertex counts ({0} vs {1})")]
    MixedN(usize, usize),
    #[error("auxiliary circle does not meet the circumcircle")]
    NoIntersection,
    #[error("neither identity nor reversal matching holds")]
    NoMatching,
    #[error("polygons do not share vertex 1")]
    NotSharedVertex,
    #[error("solution does not consist of equal-distance points")]
    NotTwoPointSolution,

    #[error("degenerate triangle: apex coincides with a base vertex")]
    DegenerateTriangle,
    #[error("both polygons erected with the same orientation")]
    SameOrientation,
}

pub type Result<T> = std::result::Result<T, Error>;
