//! Runs a scenario and collects every check with its residual and bound.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use twogon_core::bottema::{
    altitude, bottema_construct, closed_form_midpoint, exterior_sides, measured_altitude, midpoint_side,
    verify_independence, vertex_angles,
};
use twogon_core::cyclic::{distances_squared, multisets_equal, verify_identity_up_to};
use twogon_core::equalizer::{
    align_rotation, correspondence, equal_distance_points, system_star_at, verify_point_properties, CheckStatus, Locus,
    MatchingKind, SolutionPoints,
};
use twogon_core::geom::point_line_distance;
use twogon_core::{Point, RegularPolygon, Side, Tolerance};

use crate::scenario::{Kind, Params, Scenario, ScenarioDoc};

/// Number of seeded probe points used for locus checks.
const LOCUS_SAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    NotApplicable,
}

impl Status {
    pub fn is_ok(self) -> bool {
        !matches!(self, Status::Fail)
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::NotApplicable => "n/a",
        }
    }

    fn judge(residual: f64, bound: f64) -> Self {
        if residual <= bound {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl From<CheckStatus> for Status {
    fn from(s: CheckStatus) -> Self {
        match s {
            CheckStatus::Pass => Status::Pass,
            CheckStatus::Fail => Status::Fail,
            CheckStatus::Vacuous => Status::Vacuous,
            CheckStatus::NotApplicable => Status::NotApplicable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub bound: f64,
    pub status: Status,
}

impl Check {
    pub fn judged(name: impl Into<String>, residual: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            residual,
            bound,
            status: Status::judge(residual, bound),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LabeledPoint {
    pub label: &'static str,
    pub x: f64,
    pub y: f64,
}

impl LabeledPoint {
    fn new(label: &'static str, p: Point) -> Self {
        LabeledPoint { label, x: p.x, y: p.y }
    }

    pub fn point(&self) -> Point {
        Point::new(self.x, self.y)
    }
}

/// A vertex correspondence found at one equal-distance point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchingEntry {
    pub at: &'static str,
    pub kind: &'static str,
    /// `partners[k - 1]` is the vertex of the second polygon paired with `A_k`.
    pub partners: Vec<usize>,
    pub max_residual: f64,
    pub bound: f64,
    pub identity_residual: f64,
    pub reversal_residual: f64,
    /// Rotation candidate index when the second polygon had to be aligned.
    pub candidate: Option<usize>,
    /// Phase of the second polygon under which the matching holds.
    pub phase2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToleranceEcho {
    pub rel: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: ScenarioDoc,
    pub kind: &'static str,
    pub n: usize,
    pub tolerance: ToleranceEcho,
    pub classification: Option<&'static str>,
    pub points: Vec<LabeledPoint>,
    pub matchings: Vec<MatchingEntry>,
    pub checks: Vec<Check>,
    pub findings: Vec<String>,
    pub errors: Vec<String>,
    pub passed: bool,
}

/// Process exit code for a finished report.
pub fn exit_code(report: &Report) -> u8 {
    if !report.errors.is_empty() {
        2
    } else if report.passed {
        0
    } else {
        1
    }
}

impl Report {
    fn new(s: &Scenario) -> Self {
        Report {
            scenario: s.doc.clone(),
            kind: s.kind.name(),
            n: s.n,
            tolerance: ToleranceEcho {
                rel: s.tolerance.rel,
                abs: s.tolerance.abs,
            },
            classification: None,
            points: Vec::new(),
            matchings: Vec::new(),
            checks: Vec::new(),
            findings: Vec::new(),
            errors: Vec::new(),
            passed: false,
        }
    }

    fn finish(mut self) -> Self {
        self.passed = self.errors.is_empty() && self.checks.iter().all(|c| c.status.is_ok());
        self
    }

    pub fn point(&self, label: &str) -> Option<Point> {
        self.points.iter().find(|p| p.label == label).map(LabeledPoint::point)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {} (n = {})", self.kind, self.n);
        let _ = writeln!(
            out,
            "tolerance: rel {:e}, abs {:e}",
            self.tolerance.rel, self.tolerance.abs
        );
        if let Some(c) = self.classification {
            let _ = writeln!(out, "case: {c}");
        }
        for p in &self.points {
            let _ = writeln!(out, "point {}: ({:.9}, {:.9})", p.label, p.x, p.y);
        }
        for m in &self.matchings {
            let candidate = m.candidate.map(|c| format!(" candidate {c}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "matching at {}: {}{} partners {:?} residual {:.3e} (bound {:.3e})",
                m.at, m.kind, candidate, m.partners, m.max_residual, m.bound
            );
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{:>7}] {:<width$}  residual {:.3e}  bound {:.3e}",
                c.status.name(),
                c.name,
                c.residual,
                c.bound
            );
        }
        for f in &self.findings {
            let _ = writeln!(out, "finding: {f}");
        }
        for e in &self.errors {
            let _ = writeln!(out, "error: {e}");
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

pub fn run_scenario(s: &Scenario) -> Report {
    let mut report = Report::new(s);
    let tol = s.tolerance;
    let outcome = match &s.params {
        Params::Pair { p1, p2 } => run_pair(&mut report, p1, p2, s.seed, &tol),
        Params::SharedVertex { vertex, p1, p2 } => run_shared_vertex(&mut report, *vertex, p1, p2, s.seed, &tol),
        Params::Bottema {
            an,
            a1,
            bn,
            sides,
            sweep_samples,
        } => run_bottema(&mut report, *an, *a1, *bn, s.n, *sides, *sweep_samples, s.seed, &tol),
        Params::IdentityCheck { polygon, probes, max_m } => run_identity(&mut report, polygon, probes, *max_m, &tol),
    };
    if let Err(e) = outcome {
        report.errors.push(e.to_string());
    }
    report.finish()
}

type Outcome = twogon_core::Result<()>;

fn matching_entry(
    at: &'static str,
    m: &twogon_core::equalizer::Matching,
    candidate: Option<usize>,
    phase2: f64,
) -> MatchingEntry {
    MatchingEntry {
        at,
        kind: m.kind.name(),
        partners: m.partners(),
        max_residual: m.max_residual(),
        bound: m.bound,
        identity_residual: m.identity_residual,
        reversal_residual: m.reversal_residual,
        candidate,
        phase2,
    }
}

fn multiset_check(
    report: &mut Report,
    name: String,
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    m: Point,
    tol: &Tolerance,
) -> Outcome {
    let da = distances_squared(p1.vertices().as_slice(), m);
    let db = distances_squared(p2.vertices().as_slice(), m);
    let cmp = multisets_equal(&da, &db, tol)?;
    let bound = tol.bound(da.max_value().max(db.max_value()));
    report.checks.push(Check {
        name,
        residual: cmp.max_residual,
        bound,
        status: if cmp.equal { Status::Pass } else { Status::Fail },
    });
    Ok(())
}

fn system_star_check(
    report: &mut Report,
    name: String,
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    m: Point,
    tol: &Tolerance,
) -> Outcome {
    let r = system_star_at(p1, p2, m, tol)?;
    report.checks.push(Check {
        name,
        residual: r.max_residual(),
        bound: tol.rel,
        status: if r.passed { Status::Pass } else { Status::Fail },
    });
    Ok(())
}

fn sample_point(rng: &mut ChaCha8Rng, center: Point, spread: f64) -> Point {
    center + Point::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)) * spread
}

/// Congruent pairs: system (*) on the locus, and off it when the locus is a line.
fn run_congruent(
    report: &mut Report,
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    locus: Locus,
    seed: u64,
    tol: &Tolerance,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spread = 2.0 * (p1.circumradius() + p1.centroid().distance(p2.centroid()));
    let mid = p1.centroid().midpoint(p2.centroid());
    let mut on_locus: f64 = 0.0;
    let mut on_passed = true;
    for _ in 0..LOCUS_SAMPLES {
        let free = sample_point(&mut rng, mid, spread);
        let m = locus.sample(rng.random_range(-spread..spread), free);
        let r = system_star_at(p1, p2, m, tol)?;
        on_locus = on_locus.max(r.max_residual());
        on_passed &= r.passed;
    }
    report.checks.push(Check {
        name: "system (*) on locus".into(),
        residual: on_locus,
        bound: tol.rel,
        status: if on_passed { Status::Pass } else { Status::Fail },
    });
    match locus {
        Locus::EntirePlane => report
            .findings
            .push("every point of the plane satisfies system (*)".into()),
        Locus::PerpendicularBisector { o1, o2 } => {
            report
                .findings
                .push("equal-distance locus is the perpendicular bisector of O1O2".into());
            let axis = (o2 - o1) * (1.0 / o1.distance(o2));
            let mut smallest = f64::INFINITY;
            let mut all_fail = true;
            for _ in 0..LOCUS_SAMPLES {
                let base = locus.sample(rng.random_range(-spread..spread), mid);
                let shift =
                    rng.random_range(0.1..1.0) * o1.distance(o2) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                let r = system_star_at(p1, p2, base + axis * shift, tol)?;
                smallest = smallest.min(r.max_residual());
                all_fail &= !r.passed;
            }
            report.checks.push(Check {
                name: "system (*) fails off locus".into(),
                residual: smallest,
                bound: tol.rel,
                status: if all_fail { Status::Pass } else { Status::Fail },
            });
        }
    }
    Ok(())
}

fn run_pair(report: &mut Report, p1: &RegularPolygon, p2: &RegularPolygon, seed: u64, tol: &Tolerance) -> Outcome {
    let sol = equal_distance_points(p1, p2, tol)?;
    report.classification = Some(sol.case.name());
    if let Some(locus) = sol.locus {
        return run_congruent(report, p1, p2, locus, seed, tol);
    }
    let labeled: Vec<(&'static str, Point)> = match sol.points {
        SolutionPoints::Empty => {
            let (l, r1, r2) = (
                p1.centroid().distance(p2.centroid()),
                p1.circumradius(),
                p2.circumradius(),
            );
            report.findings.push(format!(
                "no equal-distance point: |O1O2| = {l:.9} outside [|R1 - R2|, R1 + R2] = [{:.9}, {:.9}]",
                (r1 - r2).abs(),
                r1 + r2
            ));
            return Ok(());
        }
        SolutionPoints::Coincident(m) => {
            report.findings.push("circles tangent: M1 and M2 coincide".into());
            vec![("M1", m)]
        }
        SolutionPoints::Pair { m1, m2 } => vec![("M1", m1), ("M2", m2)],
    };
    for &(label, m) in &labeled {
        report.points.push(LabeledPoint::new(label, m));
    }
    for &(label, m) in &labeled {
        if let Ok(direct) = correspondence(p1, p2, m, tol) {
            report.matchings.push(matching_entry(label, &direct, None, p2.phase()));
            report.findings.push(format!(
                "{label}: given polygons already match ({})",
                direct.kind.name()
            ));
        }
        let d1 = m.distance(p1.vertex(1));
        let candidates = align_rotation(p2, m, d1, tol)?;
        let mut best: Option<f64> = None;
        for (i, c) in candidates.iter().enumerate() {
            let da = distances_squared(p1.vertices().as_slice(), m);
            let db = distances_squared(c.vertices().as_slice(), m);
            let cmp = multisets_equal(&da, &db, tol)?;
            if cmp.equal {
                best = Some(best.map_or(cmp.max_residual, |b: f64| b.min(cmp.max_residual)));
            }
            if let Ok(mt) = correspondence(p1, c, m, tol) {
                report
                    .matchings
                    .push(matching_entry(label, &mt, Some(i + 1), c.phase()));
            }
        }
        let scale = {
            let da = distances_squared(p1.vertices().as_slice(), m);
            da.max_value()
        };
        report.checks.push(match best {
            Some(r) => Check::judged(format!("aligned multisets equal at {label}"), r, tol.bound(scale)),
            None => Check {
                name: format!("aligned multisets equal at {label}"),
                residual: f64::INFINITY,
                bound: tol.bound(scale),
                status: Status::Fail,
            },
        });
    }
    Ok(())
}

fn run_shared_vertex(
    report: &mut Report,
    vertex: Point,
    p1: &RegularPolygon,
    p2: &RegularPolygon,
    seed: u64,
    tol: &Tolerance,
) -> Outcome {
    report.points.push(LabeledPoint::new("A1", vertex));
    let sol = equal_distance_points(p1, p2, tol)?;
    report.classification = Some(sol.case.name());
    if let Some(locus) = sol.locus {
        return run_congruent(report, p1, p2, locus, seed, tol);
    }
    if p1.orientation() == p2.orientation() {
        report
            .findings
            .push("polygons share an orientation; the two-point theorem assumes opposite orientations".into());
    }
    let labeled: Vec<(&'static str, Point, MatchingKind)> = match sol.points {
        SolutionPoints::Empty => {
            report.findings.push("no equal-distance point".into());
            return Ok(());
        }
        SolutionPoints::Coincident(m) => {
            report.findings.push("circles tangent: M1 and M2 coincide".into());
            vec![("M1", m, MatchingKind::Identity)]
        }
        SolutionPoints::Pair { m1, m2 } => vec![("M1", m1, MatchingKind::Identity), ("M2", m2, MatchingKind::Reversal)],
    };
    for &(label, m, _) in &labeled {
        report.points.push(LabeledPoint::new(label, m));
    }
    for &(label, m, expected) in &labeled {
        let name = format!("{} matching at {label}", expected.name());
        match correspondence(p1, p2, m, tol) {
            Ok(mt) => {
                report.matchings.push(matching_entry(label, &mt, None, p2.phase()));
                let residual = match expected {
                    MatchingKind::Identity => mt.identity_residual,
                    MatchingKind::Reversal => mt.reversal_residual,
                };
                report.checks.push(Check::judged(name, residual, mt.bound));
            }
            Err(e) => {
                report.checks.push(Check {
                    name,
                    residual: f64::INFINITY,
                    bound: 0.0,
                    status: Status::Fail,
                });
                report.findings.push(format!("{label}: {e}"));
            }
        }
        system_star_check(report, format!("system (*) at {label}"), p1, p2, m, tol)?;
        multiset_check(report, format!("distance multisets equal at {label}"), p1, p2, m, tol)?;
    }
    let props = verify_point_properties(p1, p2, &sol, tol)?;
    report.points.push(LabeledPoint::new("D1", props.d1));
    report.points.push(LabeledPoint::new("D2", props.d2));
    for c in props.checks() {
        report.checks.push(Check {
            name: c.name.to_string(),
            residual: c.residual,
            bound: c.bound,
            status: c.status.into(),
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_bottema(
    report: &mut Report,
    an: Point,
    a1: Point,
    bn: Point,
    n: usize,
    sides: Option<(Side, Side)>,
    sweep_samples: usize,
    seed: u64,
    tol: &Tolerance,
) -> Outcome {
    let (side1, side2) = sides.unwrap_or_else(|| exterior_sides(an, a1, bn));
    let r = bottema_construct(an, a1, bn, n, side1, side2)?;
    report.classification = Some(if sides.is_none() { "exterior" } else { "explicit_sides" });
    if r.collinear {
        report.findings.push("An, A1, Bn are collinear".into());
    }
    report.points.push(LabeledPoint::new("M1", r.m1));
    if let Some(m2) = r.m2 {
        report.points.push(LabeledPoint::new("M2", m2));
    } else {
        report
            .findings
            .push("erected polygons are congruent: no second point".into());
    }
    report.points.push(LabeledPoint::new("D1", r.d1));
    report.points.push(LabeledPoint::new("D2", r.d2));
    report.points.push(LabeledPoint::new("H", r.h));

    let base = an.distance(bn);
    let bound = tol.bound(base);
    let expected = closed_form_midpoint(an, bn, n, midpoint_side(side1))?;
    report.checks.push(Check::judged(
        "M1 equals closed-form center",
        r.m1.distance(expected),
        bound,
    ));
    let measured = measured_altitude(&r)?;
    report.checks.push(Check::judged(
        "altitude HM1",
        (measured - altitude(base, n)).abs(),
        bound,
    ));
    report.checks.push(Check::judged(
        "H is midpoint of AnBn",
        r.h.distance(an.midpoint(bn)),
        bound,
    ));
    report.checks.push(Check::judged(
        "M1 equidistant from An and Bn",
        (r.m1.distance(an) - r.m1.distance(bn)).abs(),
        bound,
    ));
    match correspondence(&r.poly1, &r.poly2, r.m1, tol) {
        Ok(mt) => {
            report
                .checks
                .push(Check::judged("identity matching at M1", mt.identity_residual, mt.bound));
            report.matchings.push(matching_entry("M1", &mt, None, r.poly2.phase()));
        }
        Err(e) => {
            report.checks.push(Check {
                name: "identity matching at M1".into(),
                residual: f64::INFINITY,
                bound,
                status: Status::Fail,
            });
            report.findings.push(format!("M1: {e}"));
        }
    }
    match vertex_angles(&r) {
        Ok(table) => {
            let angle_bound = tol.bound(1.0);
            for row in &table.rows {
                report.checks.push(Check::judged(
                    format!("angle A{k}M1B{k}", k = row.k),
                    row.residual(),
                    angle_bound,
                ));
            }
        }
        Err(e) => report.checks.push(Check {
            name: format!("angle table ({e})"),
            residual: 0.0,
            bound: 0.0,
            status: Status::NotApplicable,
        }),
    }
    if sweep_samples >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ind = verify_independence(an, bn, n, sweep_samples, tol, &mut rng)?;
        report.findings.push(format!("apex sweep over {} samples", ind.samples));
        report
            .checks
            .push(Check::judged("apex sweep max deviation", ind.max_deviation, bound));
        report.checks.push(Check::judged(
            "apex sweep closed-form deviation",
            ind.max_closed_form_deviation,
            bound,
        ));
    }
    Ok(())
}

fn run_identity(
    report: &mut Report,
    polygon: &RegularPolygon,
    probes: &[Point],
    max_m: usize,
    tol: &Tolerance,
) -> Outcome {
    report.points.push(LabeledPoint::new("O", polygon.centroid()));
    for (i, probe) in probes.iter().enumerate() {
        let rep = verify_identity_up_to(polygon, *probe, max_m, tol)?;
        for row in &rep.rows {
            report.checks.push(Check {
                name: format!("power sum probe {} m={}", i + 1, row.m),
                residual: row.relative_residual,
                bound: tol.rel,
                status: if row.passed { Status::Pass } else { Status::Fail },
            });
        }
    }
    Ok(())
}

/// Quick apex-independence check over a fixed base, as run by the `bottema` verb.
pub fn run_bottema_sweep(an: Point, bn: Point, n: usize, samples: usize, seed: u64, tol: &Tolerance) -> Report {
    let doc = ScenarioDoc {
        kind: Kind::Bottema,
        n: n as i64,
        tolerance: Some(crate::scenario::ToleranceDoc {
            rel: tol.rel,
            abs: tol.abs,
        }),
        seed: Some(seed),
        pair: None,
        shared_vertex: None,
        bottema: None,
        identity_check: None,
    };
    let mut report = Report {
        scenario: doc,
        kind: Kind::Bottema.name(),
        n,
        tolerance: ToleranceEcho {
            rel: tol.rel,
            abs: tol.abs,
        },
        classification: Some("apex_sweep"),
        points: Vec::new(),
        matchings: Vec::new(),
        checks: Vec::new(),
        findings: Vec::new(),
        errors: Vec::new(),
        passed: false,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = (|| -> Outcome {
        let center = closed_form_midpoint(an, bn, n, Side::Left)?;
        report.points.push(LabeledPoint::new("M1", center));
        let ind = verify_independence(an, bn, n, samples, tol, &mut rng)?;
        let bound = tol.bound(an.distance(bn));
        report.findings.push(format!("apex sweep over {} samples", ind.samples));
        report
            .checks
            .push(Check::judged("apex sweep max deviation", ind.max_deviation, bound));
        report.checks.push(Check::judged(
            "apex sweep closed-form deviation",
            ind.max_closed_form_deviation,
            bound,
        ));
        let alt = point_line_distance(center, an, bn)?;
        report.checks.push(Check::judged(
            "altitude HM1",
            (alt - altitude(an.distance(bn), n)).abs(),
            bound,
        ));
        Ok(())
    })();
    if let Err(e) = outcome {
        report.errors.push(e.to_string());
    }
    report.finish()
}
