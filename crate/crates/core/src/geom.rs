//! Planar primitives: points, circles, tolerances and the handful of metric
//! predicates the rest of the crate is built on.
//!
//! All routines are pure; comparisons go through [`Tolerance`] so that the
//! same thresholds work for configurations of very different size.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    /// Panics on non-finite coordinates; use [`Point::try_new`] for untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite point ({x}, {y})");
        Point { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinite("point"))
        }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point { x: c, y: s }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn distance_squared(self, other: Point) -> f64 {
        (self - other).norm_squared()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point {
            x: 0.5 * (self.x + other.x),
            y: 0.5 * (self.y + other.y),
        }
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point { x: -self.y, y: self.x }
    }

    /// Direction angle in (−π, π].
    pub fn angle(self) -> f64 {
        normalize_angle(self.y.atan2(self.x))
    }

    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    pub fn rotate_about(self, center: Point, theta: f64) -> Point {
        center + (self - center).rotate(theta)
    }

    /// Reflection through `center` (point symmetry).
    pub fn reflect_through(self, center: Point) -> Point {
        Point {
            x: 2.0 * center.x - self.x,
            y: 2.0 * center.y - self.y,
        }
    }

    /// Mirror image across the infinite line through `a` and `b`.
    pub fn reflect_across(self, a: Point, b: Point) -> Point {
        let dir = b - a;
        let t = (self - a).dot(dir) / dir.norm_squared();
        let foot = a + dir * t;
        self.reflect_through(foot)
    }

    /// Orthogonal projection onto the infinite line through `a` and `b`.
    pub fn project_onto_line(self, a: Point, b: Point) -> Point {
        let dir = b - a;
        a + dir * ((self - a).dot(dir) / dir.norm_squared())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point {
            x: self.x * k,
            y: self.y * k,
        }
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point { x: -self.x, y: -self.y }
    }
}

/// Maps an angle to (−π, π].
pub fn normalize_angle(theta: f64) -> f64 {
    let mut a = theta % (2.0 * PI);
    if a <= -PI {
        a += 2.0 * PI;
    } else if a > PI {
        a -= 2.0 * PI;
    }
    a
}

/// Folds an angle to its unsigned measure in [0, π].
pub fn fold_angle(theta: f64) -> f64 {
    normalize_angle(theta).abs()
}

/// Mixed relative/absolute comparison: `u ≈ v` iff
/// `|u − v| ≤ abs + rel·max(|u|, |v|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel: 1e-9, abs: 1e-12 }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel.is_finite() && abs.is_finite()) {
            return Err(Error::NonFinite("tolerance"));
        }
        if rel <= 0.0 || abs <= 0.0 {
            return Err(Error::NonFinite("tolerance must be positive"));
        }
        Ok(Tolerance { rel, abs })
    }

    pub fn eq(&self, u: f64, v: f64) -> bool {
        (u - v).abs() <= self.bound(u.abs().max(v.abs()))
    }

    /// Admissible error for a quantity of magnitude `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }

    /// `|u − v|` within the bound for an externally supplied scale.
    pub fn eq_scaled(&self, u: f64, v: f64, scale: f64) -> bool {
        (u - v).abs() <= self.bound(scale)
    }

    pub fn points_eq(&self, p: Point, q: Point, scale: f64) -> bool {
        p.distance(q) <= self.bound(scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        let c = Circle { center, radius };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        if !self.center.is_finite() {
            return Err(Error::InvalidCircle("non-finite center"));
        }
        if !self.radius.is_finite() {
            return Err(Error::InvalidCircle("non-finite radius"));
        }
        if self.radius < 0.0 {
            return Err(Error::InvalidCircle("negative radius"));
        }
        Ok(())
    }

    /// Signed distance of `p` from the circle (positive outside).
    pub fn offset(&self, p: Point) -> f64 {
        p.distance(self.center) - self.radius
    }
}

/// Outcome of intersecting two circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntersectionResult {
    /// First point is left of the directed line `c1.center → c2.center`.
    TwoPoints(Point, Point),
    Tangent(Point),
    Disjoint,
    Coincident,
}

impl IntersectionResult {
    pub fn points(&self) -> Vec<Point> {
        match *self {
            IntersectionResult::TwoPoints(p, q) => vec![p, q],
            IntersectionResult::Tangent(p) => vec![p],
            _ => Vec::new(),
        }
    }
}

/// Intersects two circles.
///
/// Center distances within tolerance of `R1 + R2` or `|R1 − R2|` resolve to
/// [`IntersectionResult::Tangent`], so near-tangent configurations never
/// flicker between one and zero points.
pub fn circle_intersection(c1: &Circle, c2: &Circle, tol: &Tolerance) -> Result<IntersectionResult> {
    c1.validate()?;
    c2.validate()?;
    if c1.radius == 0.0 && c2.radius == 0.0 {
        return Err(Error::InvalidCircle("both radii are zero"));
    }

    let (r1, r2) = (c1.radius, c2.radius);
    let delta = c2.center - c1.center;
    let d = delta.norm();
    let scale = r1.max(r2).max(d);

    if d <= tol.abs {
        return Ok(if tol.eq(r1, r2) {
            IntersectionResult::Coincident
        } else {
            IntersectionResult::Disjoint
        });
    }

    let outer = r1 + r2;
    let inner = (r1 - r2).abs();
    let u = delta * (1.0 / d);
    // signed distance from c1 along the center line to the chord
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);

    if tol.eq_scaled(d, outer, scale) || tol.eq_scaled(d, inner, scale) {
        let a = a.clamp(-r1, r1);
        return Ok(IntersectionResult::Tangent(c1.center + u * a));
    }
    if d > outer || d < inner {
        return Ok(IntersectionResult::Disjoint);
    }

    let h = ((r1 - a) * (r1 + a)).max(0.0).sqrt();
    let base = c1.center + u * a;
    let left = u.perp() * h;
    Ok(IntersectionResult::TwoPoints(base + left, base - left))
}

/// Perpendicular distance from `p` to the infinite line through `a`, `b`.
pub fn point_line_distance(p: Point, a: Point, b: Point) -> Result<f64> {
    let dir = b - a;
    let len = dir.norm();
    if len <= Tolerance::default().abs {
        return Err(Error::DegenerateLine);
    }
    Ok(dir.cross(p - a).abs() / len)
}

/// Unsigned angle ∠p-vertex-q in [0, π].
pub fn angle_at(vertex: Point, p: Point, q: Point) -> Result<f64> {
    let u = p - vertex;
    let v = q - vertex;
    let (lu, lv) = (u.norm(), v.norm());
    let floor = Tolerance::default().abs;
    if lu <= floor || lv <= floor {
        return Err(Error::DegenerateRay);
    }
    let (u, v) = (u * (1.0 / lu), v * (1.0 / lv));
    Ok(u.cross(v).abs().atan2(u.dot(v)))
}

/// Signed angle from `p − vertex` to `q − vertex` in (−π, π].
pub fn signed_angle_at(vertex: Point, p: Point, q: Point) -> Result<f64> {
    let u = p - vertex;
    let v = q - vertex;
    let floor = Tolerance::default().abs;
    if u.norm() <= floor || v.norm() <= floor {
        return Err(Error::DegenerateRay);
    }
    Ok(normalize_angle(u.cross(v).atan2(u.dot(v))))
}
