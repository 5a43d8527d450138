//! Points at equal distances from the corresponding vertices of two regular
//! n-gons.
//!
//! Congruent pairs admit a whole locus (the plane when the centroids agree,
//! the perpendicular bisector of the centroids otherwise). For non-congruent
//! pairs the candidates are the intersections of the circle about `O2` with
//! radius `R1` and the circle about `O1` with radius `R2`. Pinning one pair of
//! distances by rotating the second polygon then forces the whole distance
//! lists to agree, with either the identity pairing `k ↦ k` or the reversal
//! `k ↦ n + 2 − k`.

use crate::cyclic::{distances_squared, verify_system_star, SystemStarReport};
use crate::error::{Error, Result};
use crate::geom::{angle_at, circle_intersection, point_line_distance, Circle, IntersectionResult, Point, Tolerance};
use crate::polygon::{reversed_index, RegularPolygon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseClassification {
    CongruentSameCentroid,
    CongruentDistinctCentroids,
    NonCongruent,
}

impl CaseClassification {
    pub fn name(self) -> &'static str {
        match self {
            CaseClassification::CongruentSameCentroid => "congruent_same_centroid",
            CaseClassification::CongruentDistinctCentroids => "congruent_distinct_centroids",
            CaseClassification::NonCongruent => "non_congruent",
        }
    }
}

/// Set of equal-distance points for congruent pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Locus {
    EntirePlane,
    /// Perpendicular bisector of the segment between the two centroids.
    PerpendicularBisector {
        o1: Point,
        o2: Point,
    },
}

impl Locus {
    /// Point on the locus parameterized by `t` (unused for the plane).
    pub fn sample(&self, t: f64, free: Point) -> Point {
        match *self {
            Locus::EntirePlane => free,
            Locus::PerpendicularBisector { o1, o2 } => o1.midpoint(o2) + (o2 - o1).perp() * t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolutionPoints {
    Empty,
    /// Tangent circles: one point fills both the M1 and M2 slots.
    Coincident(Point),
    Pair {
        m1: Point,
        m2: Point,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EqualDistanceSolution {
    pub case: CaseClassification,
    pub points: SolutionPoints,
    pub locus: Option<Locus>,
}

impl EqualDistanceSolution {
    pub fn m1(&self) -> Option<Point> {
        match self.points {
            SolutionPoints::Empty => None,
            SolutionPoints::Coincident(p) => Some(p),
            SolutionPoints::Pair { m1, .. } => Some(m1),
        }
    }

    pub fn m2(&self) -> Option<Point> {
        match self.points {
            SolutionPoints::Empty => None,
            SolutionPoints::Coincident(p) => Some(p),
            SolutionPoints::Pair { m2, .. } => Some(m2),
        }
    }

    pub fn is_coincident(&self) -> bool {
        matches!(self.points, SolutionPoints::Coincident(_))
    }

    /// Distinct points, M1 first.
    pub fn point_list(&self) -> Vec<Point> {
        match self.points {
            SolutionPoints::Empty => Vec::new(),
            SolutionPoints::Coincident(p) => vec![p],
            SolutionPoints::Pair { m1, m2 } => vec![m1, m2],
        }
    }
}

fn same_n(p1: &RegularPolygon, p2: &RegularPolygon) -> Result<()> {
    if p1.n() != p2.n() {
        return Err(Error::MixedN(p1.n(), p2.n()));
    }
    Ok(())
}

pub fn classify_pair(p1: &RegularPolygon, p2: &RegularPolygon, tol: &Tolerance) -> Result<CaseClassification> {
    same_n(p1, p2)?;
    let (r1, r2) = (p1.circumradius(), p2.circumradius());
    if !tol.eq(r1, r2) {
        return Ok(CaseClassification::NonCongruent);
    }
    if tol.points_eq(p1.centroid(), p2.centroid(), r1.max(r2)) {
        Ok(CaseClassification::CongruentSameCentroid)
    } else {
        Ok(CaseClassification::CongruentDistinctCentroids)
    }
}

/// Largest `|M A_k − M B_k|` over all k.
fn identity_residual(p1: &RegularPolygon, p2: &RegularPolygon, m: Point) -> f64 {
    (1..=p1.n())
        .map(|k| (m.distance(p1.vertex(k)) - m.distance(p2.vertex(k))).abs())
        .fold(0.0, f64::max)
}

fn reversal_residual(p1: &RegularPolygon, p2: &RegularPolygon, m: Point) -> f64 {
    let n = p1.n();
    (1..=n)
        .map(|k| (m.distance(p1.vertex(k)) - m.distance(p2.vertex(reversed_index(k, n)))).abs())
        .fold(0.0, f64::max)
}

/// Largest distance from `m` to any vertex of either polygon.
fn distance_scale(p1: &RegularPolygon, p2: &RegularPolygon, m: Point) -> f64 {
    let a = m.distance(p1.centroid()) + p1.circumradius();
    let b = m.distance(p2.centroid()) + p2.circumradius();
    a.max(b)
}

/// Locates the equal-distance points of a polygon pair.
///
/// For two non-congruent intersection points, the one at which the identity
/// pairing `k ↦ k` holds is M1. When neither or both points satisfy it, M1 is
/// the point left of the directed line `O1 → O2`.
pub fn equal_distance_points(
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    tol: &Tolerance,
) -> Result<EqualDistanceSolution> {
    let case = classify_pair(p1, p2, tol)?;
    match case {
        CaseClassification::CongruentSameCentroid => {
            return Ok(EqualDistanceSolution {
                case,
                points: SolutionPoints::Empty,
                locus: Some(Locus::EntirePlane),
            })
        }
        CaseClassification::CongruentDistinctCentroids => {
            return Ok(EqualDistanceSolution {
                case,
                points: SolutionPoints::Empty,
                locus: Some(Locus::PerpendicularBisector {
                    o1: p1.centroid(),
                    o2: p2.centroid(),
                }),
            })
        }
        CaseClassification::NonCongruent => {}
    }

    let about_o2 = Circle::new(p2.centroid(), p1.circumradius())?;
    let about_o1 = Circle::new(p1.centroid(), p2.circumradius())?;
    let points = match circle_intersection(&about_o2, &about_o1, tol)? {
        IntersectionResult::TwoPoints(left_of_o2o1, left_of_o1o2) => {
            let passes = |m: Point| identity_residual(p1, p2, m) <= tol.bound(distance_scale(p1, p2, m));
            let (m1, m2) = match (passes(left_of_o1o2), passes(left_of_o2o1)) {
                (false, true) => (left_of_o2o1, left_of_o1o2),
                _ => (left_of_o1o2, left_of_o2o1),
            };
            SolutionPoints::Pair { m1, m2 }
        }
        IntersectionResult::Tangent(p) => SolutionPoints::Coincident(p),
        // concentric circles of different radii, or too far apart
        IntersectionResult::Disjoint | IntersectionResult::Coincident => SolutionPoints::Empty,
    };
    Ok(EqualDistanceSolution {
        case,
        points,
        locus: None,
    })
}

/// Rotates `p2` about its centroid so that `|M B_1| = d1`.
///
/// The auxiliary circle about `m_point` with radius `d1` generally meets the
/// circumcircle of `p2` twice; both rotated copies are returned (left
/// intersection first). When every rotation works (`M` at the centroid with
/// `d1 = R2`) the polygon is returned unchanged.
pub fn align_rotation(p2: &RegularPolygon, m_point: Point, d1: f64, tol: &Tolerance) -> Result<Vec<RegularPolygon>> {
    let aux = Circle::new(m_point, d1)?;
    let omega = p2.circumcircle();
    let at = |b1: Point| p2.with_phase((b1 - p2.centroid()).angle());
    match circle_intersection(&aux, &omega, tol)? {
        IntersectionResult::TwoPoints(b, c) => Ok(vec![at(b), at(c)]),
        IntersectionResult::Tangent(b) => Ok(vec![at(b)]),
        IntersectionResult::Coincident => Ok(vec![*p2]),
        IntersectionResult::Disjoint => Err(Error::NoIntersection),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchingKind {
    /// `M A_k = M B_k`.
    Identity,
    /// `M A_k = M B_{n+2−k}`.
    Reversal,
}

impl MatchingKind {
    pub fn partner(self, k: usize, n: usize) -> usize {
        match self {
            MatchingKind::Identity => k,
            MatchingKind::Reversal => reversed_index(k, n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatchingKind::Identity => "identity",
            MatchingKind::Reversal => "reversal",
        }
    }
}

/// Law-of-cosines prediction `MA_k² = R1² + L1² − 2 R1 L1 cos((k−1)·2π/n + s)`
/// with `s = ±α`, `α = ∠M O1 A1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosineModel {
    /// Unsigned angle `∠M O1 A1`.
    pub angle: f64,
    /// Sign with which the angle enters the model (−1 or +1).
    pub sign: i32,
    /// Largest deviation of `MA_k` and of the matched `MB_j` from the model.
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub kind: MatchingKind,
    /// `|MA_k − MB_{π(k)}|` for k = 1..=n.
    pub residuals: Vec<f64>,
    pub identity_residual: f64,
    pub reversal_residual: f64,
    pub bound: f64,
    pub cosine_model: CosineModel,
}

impl Matching {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// 1-based partner list: entry k−1 is the B-index paired with A_k.
    pub fn partners(&self) -> Vec<usize> {
        let n = self.residuals.len();
        (1..=n).map(|k| self.kind.partner(k, n)).collect()
    }
}

fn cosine_model(p1: &RegularPolygon, p2: &RegularPolygon, m: Point, kind: MatchingKind) -> CosineModel {
    let n = p1.n();
    let (o1, r1) = (p1.centroid(), p1.circumradius());
    let l1 = m.distance(o1);
    let a1 = p1.vertex(1);
    let angle = angle_at(o1, m, a1).unwrap_or(0.0);
    let toward_m = (m - o1).angle();
    let signed = p1.orientation().sign() * crate::geom::normalize_angle(p1.phase() - toward_m);
    let sign = if signed < 0.0 { -1 } else { 1 };
    let step = 2.0 * std::f64::consts::PI / n as f64;

    let mut worst: f64 = 0.0;
    for k in 1..=n {
        let theta = step * (k as f64 - 1.0) + sign as f64 * angle;
        let predicted = (r1 * r1 + l1 * l1 - 2.0 * r1 * l1 * theta.cos()).max(0.0).sqrt();
        let to_a = m.distance(p1.vertex(k));
        let to_b = m.distance(p2.vertex(kind.partner(k, n)));
        worst = worst.max((to_a - predicted).abs()).max((to_b - predicted).abs());
    }
    CosineModel {
        angle,
        sign,
        max_residual: worst,
    }
}

/// Determines which vertex pairing realizes equal distances from `m_point`.
///
/// Both pairings include `k = 1`, so this also checks `|M A_1| = |M B_1|`.
/// When both pass, the one with the smaller residual wins (identity on ties).
pub fn correspondence(p1: &RegularPolygon, p2: &RegularPolygon, m_point: Point, tol: &Tolerance) -> Result<Matching> {
    same_n(p1, p2)?;
    let n = p1.n();
    let bound = tol.bound(distance_scale(p1, p2, m_point));
    let id = identity_residual(p1, p2, m_point);
    let rev = reversal_residual(p1, p2, m_point);
    let kind = match (id <= bound, rev <= bound) {
        (true, true) if rev < id => MatchingKind::Reversal,
        (true, _) => MatchingKind::Identity,
        (false, true) => MatchingKind::Reversal,
        (false, false) => return Err(Error::NoMatching),
    };
    let residuals = (1..=n)
        .map(|k| (m_point.distance(p1.vertex(k)) - m_point.distance(p2.vertex(kind.partner(k, n)))).abs())
        .collect();
    Ok(Matching {
        kind,
        residuals,
        identity_residual: id,
        reversal_residual: rev,
        bound,
        cosine_model: cosine_model(p1, p2, m_point, kind),
    })
}

/// Power-sum comparison of the two distance lists seen from `m`.
pub fn system_star_at(p1: &RegularPolygon, p2: &RegularPolygon, m: Point, tol: &Tolerance) -> Result<SystemStarReport> {
    same_n(p1, p2)?;
    let da = distances_squared(p1.vertices().as_slice(), m);
    let db = distances_squared(p2.vertices().as_slice(), m);
    verify_system_star(&da, &db, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Holds trivially because M1 and M2 coincide.
    Vacuous,
    /// Only defined for even n.
    NotApplicable,
}

impl CheckStatus {
    pub fn is_ok(self) -> bool {
        !matches!(self, CheckStatus::Fail)
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Vacuous => "vacuous",
            CheckStatus::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub residual: f64,
    pub bound: f64,
    pub status: CheckStatus,
}

impl PropertyCheck {
    fn judged(name: &'static str, residual: f64, bound: f64) -> Self {
        let status = if residual <= bound {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        PropertyCheck {
            name,
            residual,
            bound,
            status,
        }
    }

    fn vacuous_if(mut self, vacuous: bool) -> Self {
        if vacuous {
            self.status = CheckStatus::Vacuous;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub d1: Point,
    pub d2: Point,
    pub coincident: bool,
    pub property1_midpoint: PropertyCheck,
    pub property2_midpoint_general: PropertyCheck,
    pub property3_perp_bisector_and_parallel: PropertyCheck,
    pub property4_segment_length: PropertyCheck,
    /// `O2 M1 O1 A1` is a parallelogram with sides `R1`, `R2`.
    pub parallelogram_o2m1o1a1: PropertyCheck,
    pub perpendicularity_m1m2_d1d2: PropertyCheck,
}

impl PropertyReport {
    pub fn checks(&self) -> [&PropertyCheck; 6] {
        [
            &self.property1_midpoint,
            &self.property2_midpoint_general,
            &self.property3_perp_bisector_and_parallel,
            &self.property4_segment_length,
            &self.parallelogram_o2m1o1a1,
            &self.perpendicularity_m1m2_d1d2,
        ]
    }

    pub fn all_ok(&self) -> bool {
        self.checks().iter().all(|c| c.status.is_ok())
    }
}

/// Checks the metric properties of M1 and M2 for polygons sharing vertex 1.
///
/// `D1`, `D2` are the antipodes of the shared vertex on the two circumcircles.
pub fn verify_point_properties(
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    sol: &EqualDistanceSolution,
    tol: &Tolerance,
) -> Result<PropertyReport> {
    same_n(p1, p2)?;
    let (r1, r2) = (p1.circumradius(), p2.circumradius());
    let scale = r1 + r2;
    let a1 = p1.vertex(1);
    if !tol.points_eq(a1, p2.vertex(1), scale) {
        return Err(Error::NotSharedVertex);
    }
    let (m1, m2) = match (sol.m1(), sol.m2()) {
        (Some(m1), Some(m2)) => (m1, m2),
        _ => return Err(Error::NotTwoPointSolution),
    };
    let coincident = sol.is_coincident();
    let n = p1.n();
    let (o1, o2) = (p1.centroid(), p2.centroid());
    let d1 = p1.diametric_opposite(a1, tol)?;
    let d2 = p2.diametric_opposite(p2.vertex(1), tol)?;
    let len_bound = tol.bound(scale);

    let property1 = if n.is_multiple_of(2) {
        let k = 1 + n / 2;
        let mid = p1.vertex(k).midpoint(p2.vertex(k));
        PropertyCheck::judged("property1_midpoint", m1.distance(mid), len_bound)
    } else {
        PropertyCheck {
            name: "property1_midpoint",
            residual: 0.0,
            bound: len_bound,
            status: CheckStatus::NotApplicable,
        }
    };

    let property2 = PropertyCheck::judged("property2_midpoint_general", m1.distance(d1.midpoint(d2)), len_bound);

    let chord = d2 - d1;
    let on_bisector = (m2.distance(d1) - m2.distance(d2)).abs();
    let parallel = (m2 - a1).cross(chord).abs() / chord.norm();
    let property3 = PropertyCheck::judged(
        "property3_perp_bisector_and_parallel",
        on_bisector.max(parallel),
        len_bound,
    )
    .vacuous_if(coincident);

    let height = point_line_distance(a1, d1, d2)?;
    let property4 = PropertyCheck::judged("property4_segment_length", (m1.distance(m2) - height).abs(), len_bound)
        .vacuous_if(coincident);

    // O2 M1 O1 A1: opposite sides R1 (O2M1, O1A1) and R2 (M1O1, A1O2)
    let diagonals = (o1 + o2 - m1 - a1).norm();
    let sides = (m1.distance(o2) - r1).abs().max((m1.distance(o1) - r2).abs());
    let parallelogram = PropertyCheck::judged("parallelogram_o2m1o1a1", diagonals.max(sides), len_bound);

    let dot = (m1 - m2).dot(d1 - d2).abs();
    let perpendicular =
        PropertyCheck::judged("perpendicularity_m1m2_d1d2", dot, len_bound * scale).vacuous_if(coincident);

    Ok(PropertyReport {
        d1,
        d2,
        coincident,
        property1_midpoint: property1,
        property2_midpoint_general: property2,
        property3_perp_bisector_and_parallel: property3,
        property4_segment_length: property4,
        parallelogram_o2m1o1a1: parallelogram,
        perpendicularity_m1m2_d1d2: perpendicular,
    })
}
