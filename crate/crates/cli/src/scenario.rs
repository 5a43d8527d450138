//! Scenario documents: one JSON file per figure or theorem check.
//!
//! ```json
//! {
//!   "kind": "shared_vertex",
//!   "n": 4,
//!   "tolerance": {"rel": 1e-9, "abs": 1e-12},
//!   "seed": 7,
//!   "shared_vertex": {"vertex": [0, 0], "centroid1": [1, 1], "centroid2": [-2, 2],
//!                     "orient1": -1, "orient2": 1}
//! }
//! ```
//!
//! Only the block named by `kind` may be present.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use twogon_core::{Orientation, Point, RegularPolygon, Side, Tolerance};

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Validation { field: String, message: String },
}

impl ScenarioError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ScenarioError::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Pair,
    SharedVertex,
    Bottema,
    IdentityCheck,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Pair => "pair",
            Kind::SharedVertex => "shared_vertex",
            Kind::Bottema => "bottema",
            Kind::IdentityCheck => "identity_check",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceDoc {
    pub rel: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub centroid1: [f64; 2],
    pub r1: f64,
    pub phase1: f64,
    pub orient1: i32,
    pub centroid2: [f64; 2],
    pub r2: f64,
    pub phase2: f64,
    pub orient2: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SharedVertexDoc {
    pub vertex: [f64; 2],
    pub centroid1: [f64; 2],
    pub centroid2: [f64; 2],
    pub orient1: i32,
    pub orient2: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BottemaDoc {
    pub an: [f64; 2],
    pub a1: [f64; 2],
    pub bn: [f64; 2],
    /// Defaults to the exterior placement when both sides are omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side1: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side2: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep_samples: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityCheckDoc {
    pub centroid: [f64; 2],
    pub r: f64,
    pub phase: f64,
    pub orient: i32,
    pub probes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_m: Option<usize>,
}

/// The document exactly as written; serialization target for round trips.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    pub kind: Kind,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<ToleranceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shared_vertex: Option<SharedVertexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottema: Option<BottemaDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_check: Option<IdentityCheckDoc>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    Pair {
        p1: RegularPolygon,
        p2: RegularPolygon,
    },
    SharedVertex {
        vertex: Point,
        p1: RegularPolygon,
        p2: RegularPolygon,
    },
    Bottema {
        an: Point,
        a1: Point,
        bn: Point,
        sides: Option<(Side, Side)>,
        sweep_samples: usize,
    },
    IdentityCheck {
        polygon: RegularPolygon,
        probes: Vec<Point>,
        max_m: usize,
    },
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub doc: ScenarioDoc,
    pub kind: Kind,
    pub n: usize,
    pub tolerance: Tolerance,
    pub seed: u64,
    pub params: Params,
}

impl Scenario {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.doc).expect("scenario serializes")
    }

    /// Replaces one or both tolerance components.
    pub fn override_tolerance(&mut self, rel: Option<f64>, abs: Option<f64>) -> Result<(), ScenarioError> {
        if rel.is_none() && abs.is_none() {
            return Ok(());
        }
        let rel = rel.unwrap_or(self.tolerance.rel);
        let abs = abs.unwrap_or(self.tolerance.abs);
        self.tolerance = Tolerance::new(rel, abs).map_err(|e| ScenarioError::field("tolerance", e.to_string()))?;
        self.doc.tolerance = Some(ToleranceDoc { rel, abs });
        Ok(())
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    validate(doc)
}

fn point(field: &str, xy: [f64; 2]) -> Result<Point, ScenarioError> {
    Point::try_new(xy[0], xy[1]).map_err(|_| ScenarioError::field(field, "coordinates must be finite"))
}

fn orientation(field: &str, sign: i32) -> Result<Orientation, ScenarioError> {
    Orientation::from_sign(sign).ok_or_else(|| ScenarioError::field(field, "must be 1 or -1"))
}

fn side(field: &str, sign: i32) -> Result<Side, ScenarioError> {
    Side::from_sign(sign).ok_or_else(|| ScenarioError::field(field, "must be 1 or -1"))
}

fn finite(field: &str, v: f64) -> Result<f64, ScenarioError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ScenarioError::field(field, "must be finite"))
    }
}

fn polygon_err(field: &str) -> impl Fn(twogon_core::Error) -> ScenarioError + '_ {
    move |e| ScenarioError::field(field, e.to_string())
}

pub fn validate(doc: ScenarioDoc) -> Result<Scenario, ScenarioError> {
    if doc.n < 3 {
        return Err(ScenarioError::field("n", "must be at least 3"));
    }
    let n = doc.n as usize;
    let tolerance = match doc.tolerance {
        Some(t) => Tolerance::new(t.rel, t.abs).map_err(|e| ScenarioError::field("tolerance", e.to_string()))?,
        None => Tolerance::default(),
    };

    let blocks = [
        (Kind::Pair, doc.pair.is_some()),
        (Kind::SharedVertex, doc.shared_vertex.is_some()),
        (Kind::Bottema, doc.bottema.is_some()),
        (Kind::IdentityCheck, doc.identity_check.is_some()),
    ];
    for (kind, present) in blocks {
        if kind == doc.kind && !present {
            return Err(ScenarioError::field(kind.name(), "required block missing"));
        }
        if kind != doc.kind && present {
            return Err(ScenarioError::field(
                kind.name(),
                format!("not allowed for kind `{}`", doc.kind.name()),
            ));
        }
    }

    let params = match doc.kind {
        Kind::Pair => {
            let b = doc.pair.as_ref().expect("checked above");
            let o1 = orientation("pair.orient1", b.orient1)?;
            let o2 = orientation("pair.orient2", b.orient2)?;
            let p1 = RegularPolygon::new(
                n,
                point("pair.centroid1", b.centroid1)?,
                b.r1,
                finite("pair.phase1", b.phase1)?,
                o1,
            )
            .map_err(polygon_err("pair.r1"))?;
            let p2 = RegularPolygon::new(
                n,
                point("pair.centroid2", b.centroid2)?,
                b.r2,
                finite("pair.phase2", b.phase2)?,
                o2,
            )
            .map_err(polygon_err("pair.r2"))?;
            Params::Pair { p1, p2 }
        }
        Kind::SharedVertex => {
            let b = doc.shared_vertex.as_ref().expect("checked above");
            let vertex = point("shared_vertex.vertex", b.vertex)?;
            let o1 = orientation("shared_vertex.orient1", b.orient1)?;
            let o2 = orientation("shared_vertex.orient2", b.orient2)?;
            let c1 = point("shared_vertex.centroid1", b.centroid1)?;
            let c2 = point("shared_vertex.centroid2", b.centroid2)?;
            let p1 = RegularPolygon::from_shared_vertex(vertex, c1, n, o1)
                .map_err(polygon_err("shared_vertex.centroid1"))?;
            let p2 = RegularPolygon::from_shared_vertex(vertex, c2, n, o2)
                .map_err(polygon_err("shared_vertex.centroid2"))?;
            Params::SharedVertex { vertex, p1, p2 }
        }
        Kind::Bottema => {
            let b = doc.bottema.as_ref().expect("checked above");
            let an = point("bottema.an", b.an)?;
            let a1 = point("bottema.a1", b.a1)?;
            let bn = point("bottema.bn", b.bn)?;
            let sides = match (b.side1, b.side2) {
                (None, None) => None,
                (Some(s1), Some(s2)) => {
                    let (s1, s2) = (side("bottema.side1", s1)?, side("bottema.side2", s2)?);
                    if s1 == s2 {
                        return Err(ScenarioError::field("bottema.side2", "must be opposite to side1"));
                    }
                    Some((s1, s2))
                }
                (Some(_), None) => return Err(ScenarioError::field("bottema.side2", "required with side1")),
                (None, Some(_)) => return Err(ScenarioError::field("bottema.side1", "required with side2")),
            };
            let sweep_samples = b.sweep_samples.unwrap_or(0);
            if sweep_samples == 1 {
                return Err(ScenarioError::field("bottema.sweep_samples", "must be 0 or at least 2"));
            }
            Params::Bottema {
                an,
                a1,
                bn,
                sides,
                sweep_samples,
            }
        }
        Kind::IdentityCheck => {
            let b = doc.identity_check.as_ref().expect("checked above");
            let polygon = RegularPolygon::new(
                n,
                point("identity_check.centroid", b.centroid)?,
                b.r,
                finite("identity_check.phase", b.phase)?,
                orientation("identity_check.orient", b.orient)?,
            )
            .map_err(polygon_err("identity_check.r"))?;
            let probes = b
                .probes
                .iter()
                .map(|p| point("identity_check.probes", *p))
                .collect::<Result<Vec<_>, _>>()?;
            if probes.is_empty() {
                return Err(ScenarioError::field(
                    "identity_check.probes",
                    "at least one probe required",
                ));
            }
            let max_m = b.max_m.unwrap_or(n - 1);
            if max_m < 1 || max_m > n - 1 {
                return Err(ScenarioError::field(
                    "identity_check.max_m",
                    format!("must lie in 1..={}", n - 1),
                ));
            }
            Params::IdentityCheck { polygon, probes, max_m }
        }
    };

    Ok(Scenario {
        kind: doc.kind,
        n,
        tolerance,
        seed: doc.seed.unwrap_or(0),
        params,
        doc,
    })
}
