//! Seeded random configurations used by the sweeps and property checks.

use std::f64::consts::PI;

use rand::Rng;

use crate::geom::Point;
use crate::polygon::{Orientation, RegularPolygon};

fn point_in_box<R: Rng + ?Sized>(rng: &mut R, half: f64) -> Point {
    Point::new(rng.random_range(-half..=half), rng.random_range(-half..=half))
}

fn orientation<R: Rng + ?Sized>(rng: &mut R) -> Orientation {
    if rng.random_bool(0.5) {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

fn angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-PI..PI)
}

/// Two radii in `[lo, hi]` differing by at least 1 % of the larger.
fn distinct_radii<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> (f64, f64) {
    loop {
        let r1 = rng.random_range(lo..=hi);
        let r2 = rng.random_range(lo..=hi);
        if (r1 - r2).abs() >= 0.01 * r1.max(r2) {
            return (r1, r2);
        }
    }
}

/// Polygon with `R ∈ (0, 10]` centered in `[−10, 10]²` plus a probe point in
/// the same box.
pub fn identity_case<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (RegularPolygon, Point) {
    let r = 10.0 - rng.random_range(0.0..10.0);
    let poly = RegularPolygon::new(n, point_in_box(rng, 10.0), r, angle(rng), orientation(rng)).expect("valid polygon");
    (poly, point_in_box(rng, 10.0))
}

#[derive(Debug, Clone, Copy)]
pub struct SharedVertexPair {
    pub vertex: Point,
    pub p1: RegularPolygon,
    pub p2: RegularPolygon,
}

/// Non-congruent polygons with opposite orientations sharing vertex 1.
pub fn shared_vertex_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SharedVertexPair {
    let vertex = point_in_box(rng, 5.0);
    let (r1, r2) = distinct_radii(rng, 0.5, 10.0);
    let o1 = vertex + Point::polar(angle(rng)) * r1;
    let o2 = vertex + Point::polar(angle(rng)) * r2;
    let orient = orientation(rng);
    let p1 = RegularPolygon::from_shared_vertex(vertex, o1, n, orient).expect("valid polygon");
    let p2 = RegularPolygon::from_shared_vertex(vertex, o2, n, orient.opposite()).expect("valid polygon");
    SharedVertexPair { vertex, p1, p2 }
}

/// Congruent polygons about a common centroid, arbitrary phases and orientations.
pub fn congruent_same_centroid<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (RegularPolygon, RegularPolygon) {
    let c = point_in_box(rng, 5.0);
    let r = rng.random_range(0.5..=10.0);
    let p1 = RegularPolygon::new(n, c, r, angle(rng), orientation(rng)).expect("valid polygon");
    let p2 = RegularPolygon::new(n, c, r, angle(rng), orientation(rng)).expect("valid polygon");
    (p1, p2)
}

/// Congruent polygons mirrored across the perpendicular bisector of their centroids.
pub fn congruent_mirror_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (RegularPolygon, RegularPolygon) {
    let o1 = point_in_box(rng, 5.0);
    let o2 = loop {
        let c = point_in_box(rng, 5.0);
        if c.distance(o1) > 0.1 {
            break c;
        }
    };
    let r = rng.random_range(0.5..=10.0);
    let p1 = RegularPolygon::new(n, o1, r, angle(rng), orientation(rng)).expect("valid polygon");
    let mid = o1.midpoint(o2);
    let axis = (o2 - o1).perp();
    let mirror = p1.vertex(1).reflect_across(mid, mid + axis);
    let p2 = RegularPolygon::from_shared_vertex(mirror, o2, n, p1.orientation().opposite()).expect("valid polygon");
    (p1, p2)
}

/// Non-congruent pair whose centroid distance lies strictly inside
/// `(|R1 − R2|, R1 + R2)`, so two equal-distance points exist.
pub fn intersecting_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (RegularPolygon, RegularPolygon) {
    let (r1, r2) = distinct_radii(rng, 0.5, 10.0);
    let (lo, hi) = ((r1 - r2).abs(), r1 + r2);
    let d = lo + (hi - lo) * rng.random_range(0.05..0.95);
    let o1 = point_in_box(rng, 5.0);
    let o2 = o1 + Point::polar(angle(rng)) * d;
    let p1 = RegularPolygon::new(n, o1, r1, angle(rng), orientation(rng)).expect("valid polygon");
    let p2 = RegularPolygon::new(n, o2, r2, angle(rng), orientation(rng)).expect("valid polygon");
    (p1, p2)
}

/// Random point at least `margin` away from every point in `avoid`.
pub fn point_avoiding<R: Rng + ?Sized>(rng: &mut R, half: f64, avoid: &[Point], margin: f64) -> Point {
    loop {
        let p = point_in_box(rng, half);
        if avoid.iter().all(|a| a.distance(p) > margin) {
            return p;
        }
    }
}

/// Apex strictly left of the directed base `an → bn`.
pub fn apex_above<R: Rng + ?Sized>(rng: &mut R, an: Point, bn: Point) -> Point {
    let base = bn - an;
    let up = base.perp();
    an + base * rng.random_range(-1.0..2.0) + up * rng.random_range(0.05..2.0)
}
