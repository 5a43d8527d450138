//! Regular n-gons described by centroid, circumradius, phase and orientation.
//!
//! Vertices are numbered 1..=n in all public APIs, so `vertex(1)` is the
//! polygon's first vertex; [`VertexList::as_slice`] is the only 0-based view.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{normalize_angle, Circle, Point, Tolerance};

/// Direction in which vertex indices increase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        }
    }

    /// `+1` for counterclockwise, `-1` for clockwise.
    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Orientation::Ccw),
            -1 => Some(Orientation::Cw),
            _ => None,
        }
    }

    pub fn as_sign(self) -> i32 {
        match self {
            Orientation::Ccw => 1,
            Orientation::Cw => -1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Half-plane relative to a directed segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Left => 1.0,
            Side::Right => -1.0,
        }
    }

    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Side::Left),
            -1 => Some(Side::Right),
            _ => None,
        }
    }

    pub fn as_sign(self) -> i32 {
        match self {
            Side::Left => 1,
            Side::Right => -1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// Side of the directed line `a → b` on which `p` lies; `None` when `p`
    /// is on the line.
    pub fn of(p: Point, a: Point, b: Point) -> Option<Self> {
        let c = (b - a).cross(p - a);
        if c > 0.0 {
            Some(Side::Left)
        } else if c < 0.0 {
            Some(Side::Right)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularPolygon {
    n: usize,
    centroid: Point,
    circumradius: f64,
    phase: f64,
    orientation: Orientation,
}

/// Ordered vertices of a polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexList(Vec<Point>);

impl VertexList {
    /// 1-based access.
    pub fn vertex(&self, k: usize) -> Point {
        self.0[k - 1]
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Point> {
        self.0
    }
}

impl<'a> IntoIterator for &'a VertexList {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl RegularPolygon {
    /// Canonical constructor. The phase is the direction from the centroid to
    /// vertex 1 and is stored normalized to (−π, π].
    pub fn new(n: usize, centroid: Point, circumradius: f64, phase: f64, orientation: Orientation) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        if !(circumradius.is_finite() && circumradius > 0.0) {
            return Err(Error::InvalidRadius(circumradius));
        }
        if !centroid.is_finite() {
            return Err(Error::NonFinite("centroid"));
        }
        if !phase.is_finite() {
            return Err(Error::NonFinite("phase"));
        }
        Ok(RegularPolygon {
            n,
            centroid,
            circumradius,
            phase: normalize_angle(phase),
            orientation,
        })
    }

    /// Polygon with centroid `centroid` whose vertex 1 is `a1`.
    pub fn from_shared_vertex(a1: Point, centroid: Point, n: usize, orientation: Orientation) -> Result<Self> {
        let arm = a1 - centroid;
        let r = arm.norm();
        if r <= Tolerance::default().bound(a1.norm().max(centroid.norm())) {
            return Err(Error::CoincidentVertexCentroid);
        }
        Self::new(n, centroid, r, arm.angle(), orientation)
    }

    /// Polygon erected on the segment `a1`–`an`, which becomes its closing
    /// edge `A_n A_1`. The body lies on `side` of the directed line `a1 → an`.
    pub fn from_side(a1: Point, an: Point, n: usize, side: Side) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        let edge = an - a1;
        let s = edge.norm();
        if s <= Tolerance::default().bound(a1.norm().max(an.norm())) {
            return Err(Error::DegenerateSide);
        }
        let half_angle = PI / n as f64;
        let r = s / (2.0 * half_angle.sin());
        let apothem = 0.5 * s / half_angle.tan();
        let normal = edge.perp() * (side.sign() / s);
        let centroid = a1.midpoint(an) + normal * apothem;
        // body on the left of a1→an means an follows a1 counterclockwise, so
        // the index order A1, A2, … runs clockwise
        let orientation = match side {
            Side::Left => Orientation::Cw,
            Side::Right => Orientation::Ccw,
        };
        Self::new(n, centroid, r, (a1 - centroid).angle(), orientation)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn centroid(&self) -> Point {
        self.centroid
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn circumcircle(&self) -> Circle {
        Circle {
            center: self.centroid,
            radius: self.circumradius,
        }
    }

    pub fn side_length(&self) -> f64 {
        2.0 * self.circumradius * (PI / self.n as f64).sin()
    }

    /// Angle of vertex `k` (1-based) seen from the centroid, unnormalized.
    pub fn vertex_angle(&self, k: usize) -> f64 {
        let step = 2.0 * PI * (k as f64 - 1.0) / self.n as f64;
        self.phase + self.orientation.sign() * step
    }

    /// Vertex `k`, 1-based.
    pub fn vertex(&self, k: usize) -> Point {
        assert!((1..=self.n).contains(&k), "vertex index {k} outside 1..={}", self.n);
        self.centroid + Point::polar(self.vertex_angle(k)) * self.circumradius
    }

    pub fn vertices(&self) -> VertexList {
        VertexList((1..=self.n).map(|k| self.vertex(k)).collect())
    }

    pub fn rotate_about_centroid(&self, delta: f64) -> RegularPolygon {
        RegularPolygon {
            phase: normalize_angle(self.phase + delta),
            ..*self
        }
    }

    /// Same polygon with vertex 1 moved to direction `phase`.
    pub fn with_phase(&self, phase: f64) -> RegularPolygon {
        RegularPolygon {
            phase: normalize_angle(phase),
            ..*self
        }
    }

    /// Antipode of `p` on the circumcircle.
    pub fn diametric_opposite(&self, p: Point, tol: &Tolerance) -> Result<Point> {
        let offset = p.distance(self.centroid) - self.circumradius;
        if offset.abs() > tol.bound(self.circumradius) {
            return Err(Error::NotOnCircumcircle {
                offset,
                radius: self.circumradius,
            });
        }
        Ok(p.reflect_through(self.centroid))
    }
}

/// Index paired with `k` under the reversal `k ↦ n + 2 − k`, taken in 1..=n
/// (vertex 1 is fixed).
pub fn reversed_index(k: usize, n: usize) -> usize {
    let j = (n + 2 - k) % n;
    if j == 0 {
        n
    } else {
        j
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(p: Point, q: Point) -> bool {
        p.distance(q) < 1e-12
    }

    #[test]
    fn unit_square() {
        let sq = RegularPolygon::new(4, Point::ORIGIN, 1.0, 0.0, Orientation::Ccw).unwrap();
        let v = sq.vertices();
        let expect = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (k, (x, y)) in expect.into_iter().enumerate() {
            assert!(close(v.vertex(k + 1), Point::new(x, y)));
        }
        assert!(close(sq.vertex(3), Point::new(-1.0, 0.0)));
    }

    #[test]
    fn triangle_and_hexagon_vertices() {
        let tri = RegularPolygon::new(3, Point::ORIGIN, 1.0, PI / 2.0, Orientation::Ccw).unwrap();
        assert!(close(tri.vertex(1), Point::new(0.0, 1.0)));
        let hex = RegularPolygon::new(6, Point::ORIGIN, 1.0, 0.0, Orientation::Ccw).unwrap();
        assert!(close(hex.vertex(4), Point::new(-1.0, 0.0)));
        let pent = RegularPolygon::new(5, Point::ORIGIN, 2.0, 0.3, Orientation::Cw).unwrap();
        let a = 0.3 - 2.0 * PI / 5.0;
        assert!(close(pent.vertex(2), Point::new(2.0 * a.cos(), 2.0 * a.sin())));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(
            RegularPolygon::new(2, Point::ORIGIN, 1.0, 0.0, Orientation::Ccw),
            Err(Error::InvalidN(2))
        );
        assert!(matches!(
            RegularPolygon::new(4, Point::ORIGIN, 0.0, 0.0, Orientation::Ccw),
            Err(Error::InvalidRadius(_))
        ));
        assert!(matches!(
            RegularPolygon::new(4, Point::ORIGIN, f64::INFINITY, 0.0, Orientation::Ccw),
            Err(Error::InvalidRadius(_))
        ));
        assert!(RegularPolygon::new(4, Point::ORIGIN, 1.0, f64::NAN, Orientation::Ccw).is_err());
    }

    #[test]
    fn phase_is_normalized() {
        let p = RegularPolygon::new(5, Point::ORIGIN, 1.0, 3.0 * PI, Orientation::Ccw).unwrap();
        assert!((p.phase() - PI).abs() < 1e-15);
    }

    #[test]
    fn shared_vertex_square() {
        let sq = RegularPolygon::from_shared_vertex(Point::ORIGIN, Point::new(1.0, 1.0), 4, Orientation::Ccw).unwrap();
        assert!((sq.circumradius() - 2f64.sqrt()).abs() < 1e-15);
        assert!((sq.phase() + 3.0 * PI / 4.0).abs() < 1e-15);
        let expect = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)];
        for (k, (x, y)) in expect.into_iter().enumerate() {
            assert!(close(sq.vertex(k + 1), Point::new(x, y)), "k={}", k + 1);
        }
        let tri = RegularPolygon::from_shared_vertex(Point::new(1.0, 0.0), Point::ORIGIN, 3, Orientation::Ccw).unwrap();
        assert_eq!(tri.vertex(1), Point::new(1.0, 0.0));
        assert_eq!(
            RegularPolygon::from_shared_vertex(Point::new(1.0, 1.0), Point::new(1.0, 1.0), 4, Orientation::Ccw),
            Err(Error::CoincidentVertexCentroid)
        );
    }

    #[test]
    fn square_on_side_below() {
        let sq = RegularPolygon::from_side(Point::ORIGIN, Point::new(1.0, 0.0), 4, Side::Right).unwrap();
        assert!(close(sq.centroid(), Point::new(0.5, -0.5)));
        let expect = [(0.0, 0.0), (0.0, -1.0), (1.0, -1.0), (1.0, 0.0)];
        for (k, (x, y)) in expect.into_iter().enumerate() {
            assert!(close(sq.vertex(k + 1), Point::new(x, y)), "k={}", k + 1);
        }
        assert_eq!(sq.orientation(), Orientation::Ccw);
    }

    #[test]
    fn triangle_on_side_above() {
        let tri = RegularPolygon::from_side(Point::ORIGIN, Point::new(1.0, 0.0), 3, Side::Left).unwrap();
        assert!((tri.circumradius() - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(close(tri.centroid(), Point::new(0.5, 3f64.sqrt() / 6.0)));
        assert!(close(tri.vertex(2), Point::new(0.5, 3f64.sqrt() / 2.0)));
        assert!(close(tri.vertex(3), Point::new(1.0, 0.0)));
        assert_eq!(
            RegularPolygon::from_side(Point::ORIGIN, Point::ORIGIN, 3, Side::Left),
            Err(Error::DegenerateSide)
        );
    }

    #[test]
    fn rotation_examples() {
        let sq = RegularPolygon::new(4, Point::ORIGIN, 1.0, 0.0, Orientation::Ccw).unwrap();
        let full = sq.rotate_about_centroid(2.0 * PI);
        for k in 1..=4 {
            assert!(close(full.vertex(k), sq.vertex(k)));
        }
        let quarter = sq.rotate_about_centroid(PI / 2.0);
        for k in 1..=4 {
            assert!(close(quarter.vertex(k), sq.vertex(k % 4 + 1)));
        }
        let p = RegularPolygon::new(5, Point::ORIGIN, 1.0, 0.1, Orientation::Ccw).unwrap();
        assert!((p.rotate_about_centroid(0.2).phase() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn diametric_opposites() {
        let t = Tolerance::default();
        let c = RegularPolygon::new(4, Point::ORIGIN, 1.0, 0.0, Orientation::Ccw).unwrap();
        assert_eq!(
            c.diametric_opposite(Point::new(1.0, 0.0), &t).unwrap(),
            Point::new(-1.0, 0.0)
        );
        let c2 = RegularPolygon::from_shared_vertex(Point::ORIGIN, Point::new(1.0, 1.0), 4, Orientation::Ccw).unwrap();
        assert_eq!(c2.diametric_opposite(Point::ORIGIN, &t).unwrap(), Point::new(2.0, 2.0));
        assert!(matches!(
            c.diametric_opposite(Point::new(1.1, 0.0), &t),
            Err(Error::NotOnCircumcircle { .. })
        ));
    }

    #[test]
    fn reversal_indices() {
        assert_eq!(reversed_index(2, 4), 4);
        assert_eq!(reversed_index(3, 4), 3);
        assert_eq!(reversed_index(4, 4), 2);
        assert_eq!(reversed_index(1, 4), 1);
        assert_eq!(reversed_index(4, 6), 4);
        assert_eq!(reversed_index(2, 3), 3);
    }
}
