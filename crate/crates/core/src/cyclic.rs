//! Power sums of squared vertex distances.
//!
//! For a regular n-gon of circumradius `R` and a point at distance `L` from
//! its centroid, the power sums of the squared vertex distances of order
//! `m = 1..n−1` depend only on `(n, R, L)`. This module evaluates both sides
//! of that identity, compares two distance lists order by order, and decides
//! multiset equality by sorted matching with a Newton's-identities
//! cross-check.

use crate::error::{Error, Result};
use crate::geom::{Point, Tolerance};
use crate::polygon::RegularPolygon;

/// Squared distances from one point to an ordered list of vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMultiset {
    squared_distances: Vec<f64>,
    source_point: Point,
    labels: Vec<usize>,
}

impl DistanceMultiset {
    /// Builds a multiset from raw values; labels are `1..=len`.
    pub fn from_values(values: Vec<f64>, source_point: Point) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::LengthMismatch(0, 1));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::NonFinite("squared distance"));
        }
        let labels = (1..=values.len()).collect();
        Ok(DistanceMultiset {
            squared_distances: values,
            source_point,
            labels,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.squared_distances
    }

    pub fn source_point(&self) -> Point {
        self.source_point
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.squared_distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squared_distances.is_empty()
    }

    pub fn max_value(&self) -> f64 {
        self.squared_distances.iter().copied().fold(0.0, f64::max)
    }

    /// Drops the entry with 1-based label `k`.
    pub fn without(&self, k: usize) -> DistanceMultiset {
        let keep = |i: &usize| self.labels[*i] != k;
        let idx: Vec<usize> = (0..self.len()).filter(keep).collect();
        DistanceMultiset {
            squared_distances: idx.iter().map(|&i| self.squared_distances[i]).collect(),
            source_point: self.source_point,
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
        }
    }
}

/// `p_1 … p_K` with `p_m = Σ x_i^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumVector(pub Vec<f64>);

/// `e_1 … e_K`.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementarySymmetricVector(pub Vec<f64>);

pub fn distances_squared(vertices: &[Point], m_point: Point) -> DistanceMultiset {
    assert!(!vertices.is_empty(), "empty vertex list");
    DistanceMultiset {
        squared_distances: vertices.iter().map(|v| v.distance_squared(m_point)).collect(),
        source_point: m_point,
        labels: (1..=vertices.len()).collect(),
    }
}

/// Direct evaluation of `Σ (d_i²)^m`.
pub fn power_sum_lhs(dm: &DistanceMultiset, m: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::OrderOutOfRange { m, max: usize::MAX });
    }
    Ok(power_sum(dm.values(), m, 1.0))
}

fn power_sum(values: &[f64], m: usize, scale: f64) -> f64 {
    values.iter().map(|v| (v / scale).powi(m as i32)).sum()
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as f64
}

/// Closed form of the power sum of order `m` for a regular n-gon with
/// circumradius `r` seen from distance `l`:
///
/// `n·[(R²+L²)^m + Σ_{k=1}^{⌊m/2⌋} C(m,2k)·C(2k,k)·R^{2k}L^{2k}·(R²+L²)^{m−2k}]`.
///
/// Only orders `1..=n−1` are accepted.
pub fn power_sum_closed_form(n: usize, r: f64, l: f64, m: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    if m < 1 || m > n - 1 {
        return Err(Error::OrderOutOfRange { m, max: n - 1 });
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidRadius(r));
    }
    if !(l.is_finite() && l >= 0.0) {
        return Err(Error::NonFinite("offset"));
    }
    let s = r * r + l * l;
    let rl = r * r * l * l;
    let mut total = s.powi(m as i32);
    for k in 1..=m / 2 {
        total += binomial(m, 2 * k) * binomial(2 * k, k) * rl.powi(k as i32) * s.powi((m - 2 * k) as i32);
    }
    Ok(n as f64 * total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRow {
    pub m: usize,
    /// `Σ d_i^{2m}` in original units.
    pub direct: f64,
    pub closed_form: f64,
    /// Relative residual computed on max-normalized entries.
    pub relative_residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub n: usize,
    pub circumradius: f64,
    pub offset: f64,
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.rows.iter().map(|r| r.relative_residual).fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

/// Compares direct and closed-form power sums for every order `1..=n−1`.
pub fn verify_identity(poly: &RegularPolygon, m_point: Point, tol: &Tolerance) -> IdentityReport {
    verify_identity_up_to(poly, m_point, poly.n() - 1, tol).expect("orders within range")
}

/// As [`verify_identity`] with orders restricted to `1..=max_m`.
pub fn verify_identity_up_to(
    poly: &RegularPolygon,
    m_point: Point,
    max_m: usize,
    tol: &Tolerance,
) -> Result<IdentityReport> {
    let n = poly.n();
    if max_m < 1 || max_m > n - 1 {
        return Err(Error::OrderOutOfRange { m: max_m, max: n - 1 });
    }
    let dm = distances_squared(poly.vertices().as_slice(), m_point);
    let r = poly.circumradius();
    let l = m_point.distance(poly.centroid());
    // dividing every d² by s divides R² and L² by s as well
    let s = dm.max_value().max(r * r);
    let root = s.sqrt();

    let rows = (1..=max_m)
        .map(|m| {
            let lhs = power_sum(dm.values(), m, s);
            let rhs = power_sum_closed_form(n, r / root, l / root, m).expect("validated order");
            let residual = relative_difference(lhs, rhs);
            IdentityRow {
                m,
                direct: power_sum(dm.values(), m, 1.0),
                closed_form: power_sum_closed_form(n, r, l, m).expect("validated order"),
                relative_residual: residual,
                passed: residual <= tol.rel,
            }
        })
        .collect();

    Ok(IdentityReport {
        n,
        circumradius: r,
        offset: l,
        rows,
    })
}

fn relative_difference(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

pub fn power_sums(values: &[f64], order: usize) -> PowerSumVector {
    PowerSumVector((1..=order).map(|m| power_sum(values, m, 1.0)).collect())
}

/// Newton's identities: `m·e_m = Σ_{i=1}^{m} (−1)^{i−1} e_{m−i} p_i`, `e_0 = 1`.
pub fn power_sums_to_elementary(p: &PowerSumVector) -> ElementarySymmetricVector {
    let k = p.0.len();
    let mut e = vec![0.0; k + 1];
    e[0] = 1.0;
    for m in 1..=k {
        let mut acc = 0.0;
        for i in 1..=m {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * e[m - i] * p.0[i - 1];
        }
        e[m] = acc / m as f64;
    }
    e.remove(0);
    ElementarySymmetricVector(e)
}

/// Coefficients `c_0 … c_K` (ascending powers, `c_K = 1`) of the monic
/// polynomial whose roots have the given elementary symmetric functions.
pub fn monic_coefficients(e: &ElementarySymmetricVector) -> Vec<f64> {
    let k = e.0.len();
    let mut c = vec![0.0; k + 1];
    c[k] = 1.0;
    for (j, ej) in e.0.iter().enumerate() {
        let sign = if (j + 1) % 2 == 0 { 1.0 } else { -1.0 };
        c[k - j - 1] = sign * ej;
    }
    c
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultisetComparison {
    pub equal: bool,
    /// 1-based: entry `i` of the first multiset matches entry
    /// `permutation[i−1]` of the second. Present only when `equal`.
    pub permutation: Option<Vec<usize>>,
    /// Largest sorted pairwise difference, relative to the largest entry.
    pub max_residual: f64,
    /// Largest difference between the elementary symmetric functions of the
    /// max-normalized entries.
    pub newton_residual: f64,
}

/// Decides whether two squared-distance lists are the same multiset.
///
/// The decision is made by pairing sorted values; the comparison scale is the
/// largest entry of either list. Ties keep original index order.
pub fn multisets_equal(a: &DistanceMultiset, b: &DistanceMultiset, tol: &Tolerance) -> Result<MultisetComparison> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let scale = a.max_value().max(b.max_value());
    let sorted = |d: &DistanceMultiset| {
        let mut idx: Vec<usize> = (0..d.len()).collect();
        idx.sort_by(|&i, &j| d.values()[i].total_cmp(&d.values()[j]).then(i.cmp(&j)));
        idx
    };
    let ia = sorted(a);
    let ib = sorted(b);

    let mut max_diff: f64 = 0.0;
    let mut equal = true;
    for (&i, &j) in ia.iter().zip(&ib) {
        let (u, v) = (a.values()[i], b.values()[j]);
        max_diff = max_diff.max((u - v).abs());
        if !tol.eq_scaled(u, v, scale) {
            equal = false;
        }
    }

    let permutation = equal.then(|| {
        let mut perm = vec![0; a.len()];
        for (&i, &j) in ia.iter().zip(&ib) {
            perm[i] = b.labels()[j];
        }
        perm
    });

    let newton_residual = if scale > 0.0 {
        let norm = |d: &DistanceMultiset| -> Vec<f64> { d.values().iter().map(|v| v / scale).collect() };
        let ea = power_sums_to_elementary(&power_sums(&norm(a), a.len()));
        let eb = power_sums_to_elementary(&power_sums(&norm(b), b.len()));
        ea.0.iter().zip(&eb.0).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    } else {
        0.0
    };

    Ok(MultisetComparison {
        equal,
        permutation,
        max_residual: if scale > 0.0 { max_diff / scale } else { 0.0 },
        newton_residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SystemStarReport {
    /// `(m, relative residual)` for `m = 1..=n−1`.
    pub residuals: Vec<(usize, f64)>,
    pub passed: bool,
}

impl SystemStarReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.1).fold(0.0, f64::max)
    }

    /// First order at which the power sums disagree.
    pub fn first_failure(&self, tol: &Tolerance) -> Option<usize> {
        self.residuals.iter().find(|r| r.1 > tol.rel).map(|r| r.0)
    }
}

/// Checks that two distance lists have equal power sums of orders
/// `1..=n−1`. This is necessary, not sufficient, for multiset equality.
pub fn verify_system_star(da: &DistanceMultiset, db: &DistanceMultiset, tol: &Tolerance) -> Result<SystemStarReport> {
    if da.len() != db.len() {
        return Err(Error::LengthMismatch(da.len(), db.len()));
    }
    let scale = da.max_value().max(db.max_value());
    let order = da.len().saturating_sub(1).max(1);
    let residuals: Vec<(usize, f64)> = (1..=order)
        .map(|m| {
            if scale == 0.0 {
                return (m, 0.0);
            }
            let pa = power_sum(da.values(), m, scale);
            let pb = power_sum(db.values(), m, scale);
            (m, relative_difference(pa, pb))
        })
        .collect();
    let passed = residuals.iter().all(|r| r.1 <= tol.rel);
    Ok(SystemStarReport { residuals, passed })
}
