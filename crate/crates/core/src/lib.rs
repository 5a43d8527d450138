//! Pairs of regular n-gons and the points seen at equal distances from
//! their corresponding vertices.
//!
//! * [`geom`]: points, circles, tolerances, circle–circle intersection.
//! * [`polygon`]: the regular-polygon model and its constructors.
//! * [`cyclic`]: power sums of squared vertex distances, Newton's identities
//!   and multiset comparison.
//! * [`equalizer`]: case classification, the equal-distance points M1/M2,
//!   rotation alignment, vertex correspondences and point properties.
//! * [`bottema`]: the generalized Bottema construction and its angle table.
//! * [`sampling`]: seeded random configurations for sweeps.

pub mod bottema;
pub mod cyclic;
pub mod equalizer;
pub mod error;
pub mod geom;
pub mod polygon;
pub mod sampling;

pub use error::{Error, Result};
pub use geom::{Circle, IntersectionResult, Point, Tolerance};
pub use polygon::{Orientation, RegularPolygon, Side, VertexList};
