//! Generalized Bottema construction.
//!
//! Erect regular n-gons on the sides `A1An` and `A1Bn` of a triangle. The
//! midpoint `M1` of the antipodes `D1`, `D2` of the apex `A1` does not depend
//! on where `A1` is: it is the center of the regular n-gon on `AnBn`, at
//! height `½·|AnBn|·cot(π/n)` above the base midpoint.

use std::f64::consts::PI;

use rand::Rng;

use crate::equalizer::equal_distance_points;
use crate::error::{Error, Result};
use crate::geom::{angle_at, fold_angle, point_line_distance, Point, Tolerance};
use crate::polygon::{RegularPolygon, Side};

#[derive(Debug, Clone, PartialEq)]
pub struct BottemaResult {
    pub an: Point,
    pub a1: Point,
    pub bn: Point,
    /// Erected on `A1An`; vertex 1 is `A1`, vertex n is `An`.
    pub poly1: RegularPolygon,
    /// Erected on `A1Bn`; vertex 1 is `A1`, vertex n is `Bn`.
    pub poly2: RegularPolygon,
    pub d1: Point,
    pub d2: Point,
    pub m1: Point,
    /// Second equal-distance point; `None` when the two polygons are
    /// congruent (isosceles apex) and the equal-distance set is a line.
    pub m2: Option<Point>,
    /// Foot of the perpendicular from `m1` to the line `AnBn`.
    pub h: Point,
    /// `An`, `A1`, `Bn` collinear within tolerance.
    pub collinear: bool,
}

impl BottemaResult {
    pub fn n(&self) -> usize {
        self.poly1.n()
    }

    /// Side of the directed base `An → Bn` on which `m1` lies.
    pub fn normal_side(&self) -> Side {
        Side::of(self.m1, self.an, self.bn).unwrap_or(Side::Left)
    }
}

/// Sides that place both polygons away from the triangle interior.
///
/// For a collinear apex both sides are arbitrary but opposite.
pub fn exterior_sides(an: Point, a1: Point, bn: Point) -> (Side, Side) {
    match Side::of(bn, a1, an) {
        Some(inside) => (inside.opposite(), inside),
        None => (Side::Right, Side::Left),
    }
}

/// Builds both polygons and the derived points.
///
/// `side1` selects the half-plane of the directed line `a1 → an` for the
/// first polygon, `side2` that of `a1 → bn` for the second; they must differ
/// so the polygons have opposite orientation.
pub fn bottema_construct(an: Point, a1: Point, bn: Point, n: usize, side1: Side, side2: Side) -> Result<BottemaResult> {
    let tol = Tolerance::default();
    let scale = an.distance(bn).max(a1.distance(an)).max(a1.distance(bn));
    if a1.distance(an) <= tol.bound(scale) || a1.distance(bn) <= tol.bound(scale) {
        return Err(Error::DegenerateTriangle);
    }
    if side1 == side2 {
        return Err(Error::SameOrientation);
    }
    let poly1 = RegularPolygon::from_side(a1, an, n, side1)?;
    let poly2 = RegularPolygon::from_side(a1, bn, n, side2)?;
    let d1 = poly1.diametric_opposite(poly1.vertex(1), &tol)?;
    let d2 = poly2.diametric_opposite(poly2.vertex(1), &tol)?;
    let m1 = d1.midpoint(d2);
    let m2 = equal_distance_points(&poly1, &poly2, &tol)?.m2();
    let collinear = (an - a1).cross(bn - a1).abs() <= tol.bound(scale * scale);
    let h = if an.distance(bn) > tol.bound(scale) {
        m1.project_onto_line(an, bn)
    } else {
        an
    };
    Ok(BottemaResult {
        an,
        a1,
        bn,
        poly1,
        poly2,
        d1,
        d2,
        m1,
        m2,
        h,
        collinear,
    })
}

/// Center of the regular n-gon erected on `AnBn` on `normal_side` of the
/// directed line `an → bn`.
pub fn closed_form_midpoint(an: Point, bn: Point, n: usize, normal_side: Side) -> Result<Point> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let base = bn - an;
    let len = base.norm();
    if len <= Tolerance::default().bound(an.norm().max(bn.norm())) {
        return Err(Error::DegenerateSide);
    }
    let height = 0.5 * len / (PI / n as f64).tan();
    Ok(an.midpoint(bn) + base.perp() * (normal_side.sign() * height / len))
}

/// Side of the base on which `m1` lands for the given construction:
/// always opposite to `side1`.
pub fn midpoint_side(side1: Side) -> Side {
    side1.opposite()
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport {
    pub samples: usize,
    /// Largest pairwise distance between the `m1` of different apexes.
    pub max_deviation: f64,
    /// Largest distance between an `m1` and the closed-form center.
    pub max_closed_form_deviation: f64,
    pub base_length: f64,
    pub passed: bool,
}

/// Samples `samples` apexes left of the directed base `an → bn` (away from
/// the base line), builds the exterior construction for each, and measures
/// how much `m1` moves.
pub fn verify_independence<R: Rng + ?Sized>(
    an: Point,
    bn: Point,
    n: usize,
    samples: usize,
    tol: &Tolerance,
    rng: &mut R,
) -> Result<IndependenceReport> {
    if samples < 2 {
        return Err(Error::NonFinite("samples must be at least 2"));
    }
    let base = bn - an;
    let len = base.norm();
    let expected = closed_form_midpoint(an, bn, n, Side::Left)?;
    let along = base * (1.0 / len);
    let up = along.perp();

    let mut centers = Vec::with_capacity(samples);
    while centers.len() < samples {
        let t: f64 = rng.random_range(-1.0..2.0);
        let s: f64 = rng.random_range(0.05..2.0);
        let a1 = an + along * (t * len) + up * (s * len);
        let (side1, side2) = exterior_sides(an, a1, bn);
        centers.push(bottema_construct(an, a1, bn, n, side1, side2)?.m1);
    }

    let mut max_deviation: f64 = 0.0;
    for (i, p) in centers.iter().enumerate() {
        for q in &centers[i + 1..] {
            max_deviation = max_deviation.max(p.distance(*q));
        }
    }
    let max_closed_form_deviation = centers.iter().map(|c| c.distance(expected)).fold(0.0, f64::max);
    let bound = tol.bound(len);
    Ok(IndependenceReport {
        samples,
        max_deviation,
        max_closed_form_deviation,
        base_length: len,
        passed: max_deviation <= bound && max_closed_form_deviation <= bound,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AngleRow {
    pub k: usize,
    /// `∠A_k M1 B_k`.
    pub measured: f64,
    /// `∠A_{n+2−k} M1 B_{n+2−k}`.
    pub mirrored: f64,
    /// `2π(k−1)/n` folded into [0, π].
    pub expected: f64,
}

impl AngleRow {
    pub fn residual(&self) -> f64 {
        (self.measured - self.expected)
            .abs()
            .max((self.mirrored - self.expected).abs())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AngleTable {
    pub rows: Vec<AngleRow>,
}

impl AngleTable {
    pub fn max_residual(&self) -> f64 {
        self.rows.iter().map(AngleRow::residual).fold(0.0, f64::max)
    }
}

/// Measures the angles subtended at `m1` by corresponding vertex pairs.
pub fn vertex_angles(result: &BottemaResult) -> Result<AngleTable> {
    let n = result.n();
    let (p1, p2, m1) = (&result.poly1, &result.poly2, result.m1);
    let rows = (2..=n)
        .map(|k| {
            let j = n + 2 - k;
            Ok(AngleRow {
                k,
                measured: angle_at(m1, p1.vertex(k), p2.vertex(k))?,
                mirrored: angle_at(m1, p1.vertex(j), p2.vertex(j))?,
                expected: fold_angle(2.0 * PI * (k as f64 - 1.0) / n as f64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AngleTable { rows })
}

/// `|HM1|` predicted from the base length.
pub fn altitude(base_length: f64, n: usize) -> f64 {
    0.5 * base_length / (PI / n as f64).tan()
}

/// Distance from `m1` to the base line.
pub fn measured_altitude(result: &BottemaResult) -> Result<f64> {
    point_line_distance(result.m1, result.an, result.bn)
}
