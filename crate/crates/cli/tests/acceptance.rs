//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.
//!
//! Reference values are recomputed here from first principles (direct vertex
//! coordinates, binomial expansions, subset enumeration, hand-built squares)
//! rather than taken from the library.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twogon_cli::scenario::{parse_scenario, validate, Kind};
use twogon_cli::sweep::random_scenario;
use twogon_core::bottema::{bottema_construct, closed_form_midpoint, exterior_sides, measured_altitude, vertex_angles};
use twogon_core::cyclic::{
    distances_squared, monic_coefficients, multisets_equal, power_sum_closed_form, power_sum_lhs, power_sums,
    power_sums_to_elementary, verify_identity, verify_system_star,
};
use twogon_core::equalizer::{
    align_rotation, correspondence, equal_distance_points, verify_point_properties, CheckStatus, Locus, MatchingKind,
    SolutionPoints,
};
use twogon_core::sampling::{
    apex_above, congruent_mirror_pair, congruent_same_centroid, identity_case, intersecting_pair, point_avoiding,
    shared_vertex_pair, SharedVertexPair,
};
use twogon_core::{Orientation, Point, RegularPolygon, Side, Tolerance};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Vertices from the polygon parameters, independent of `RegularPolygon::vertex`.
fn raw_vertices(p: &RegularPolygon) -> Vec<Point> {
    let n = p.n();
    let o = match p.orientation() {
        Orientation::Ccw => 1.0,
        Orientation::Cw => -1.0,
    };
    (0..n)
        .map(|i| {
            let t = p.phase() + o * 2.0 * PI * i as f64 / n as f64;
            Point::new(
                p.centroid().x + p.circumradius() * t.cos(),
                p.centroid().y + p.circumradius() * t.sin(),
            )
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Σ_k |M A_k|^{2m} from averaging cos^j over equally spaced angles.
fn closed_form_oracle(n: usize, r: f64, l: f64, m: usize) -> f64 {
    let a = r * r + l * l;
    let b = 2.0 * r * l;
    let mut total = 0.0;
    for j in (0..=m).step_by(2) {
        // mean of cos^j over n equally spaced angles, valid for j < n
        let mean = binomial(j, j / 2) / 2f64.powi(j as i32);
        total += binomial(m, j) * a.powi((m - j) as i32) * b.powi(j as i32) * mean;
    }
    n as f64 * total
}

fn reversed(k: usize, n: usize) -> usize {
    if k == 1 {
        1
    } else {
        n + 2 - k
    }
}

fn shared_configs() -> Vec<SharedVertexPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    (0..1000)
        .map(|_| {
            let n = rng.random_range(3..=12);
            shared_vertex_pair(&mut rng, n)
        })
        .collect()
}

fn bottema_configs() -> Vec<(usize, Vec<Point>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let (an, bn) = (Point::new(0.0, 0.0), Point::new(2.0, 0.0));
    (3..=12)
        .map(|n| (n, (0..100).map(|_| apex_above(&mut rng, an, bn)).collect()))
        .collect()
}

fn criterion_1() -> Verdict {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for case in 0..10_000 {
        let n = rng.random_range(3..=12);
        let (poly, m) = identity_case(&mut rng, n);
        let l = m.distance(poly.centroid());
        let d2: Vec<f64> = raw_vertices(&poly).iter().map(|v| v.distance_squared(m)).collect();
        let dm = distances_squared(poly.vertices().as_slice(), m);
        for order in 1..n {
            let direct: f64 = d2.iter().map(|d| d.powi(order as i32)).sum();
            let oracle = closed_form_oracle(n, poly.circumradius(), l, order);
            let lib_closed = power_sum_closed_form(n, poly.circumradius(), l, order).map_err(|e| e.to_string())?;
            let lib_direct = power_sum_lhs(&dm, order).map_err(|e| e.to_string())?;
            for (what, value) in [
                ("direct", direct),
                ("library closed form", lib_closed),
                ("library sum", lib_direct),
            ] {
                let rel = (value - oracle).abs() / oracle.abs();
                worst = worst.max(rel);
                ensure(rel < 1e-9, || {
                    format!("case {case} n={n} m={order}: {what} relative residual {rel:e}")
                })?;
            }
        }
        let rep = verify_identity(&poly, m, &tol);
        ensure(rep.passed() && rep.max_residual() < 1e-9, || {
            format!("case {case}: verify_identity max residual {:e}", rep.max_residual())
        })?;
    }
    Ok(format!("10000 cases, worst relative residual {worst:.2e}"))
}

fn elementary_by_subsets(values: &[f64], k: usize) -> f64 {
    let n = values.len();
    (0u32..(1 << n))
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| values[i])
                .product::<f64>()
        })
        .sum()
}

fn expand(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= r * ci;
        }
        c = next;
    }
    c
}

fn criterion_2() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut worst: f64 = 0.0;
    for case in 0..1000 {
        let size = rng.random_range(1..=8);
        let values: Vec<f64> = (0..size).map(|_| rng.random_range(-10.0..10.0)).collect();
        let e = power_sums_to_elementary(&power_sums(&values, size));
        let coeffs = monic_coefficients(&e);
        let brute = expand(&values);
        ensure(coeffs.len() == brute.len(), || {
            format!("case {case}: coefficient count")
        })?;
        let abs: Vec<f64> = values.iter().map(|v| v.abs()).collect();
        for k in 1..=size {
            // coefficient of x^{size-k} is (-1)^k e_k; its natural scale is e_k(|x|)
            let scale = elementary_by_subsets(&abs, k).max(f64::MIN_POSITIVE);
            let subset = elementary_by_subsets(&values, k);
            let rel_e = (e.0[k - 1] - subset).abs() / scale;
            let rel_c = (coeffs[size - k] - brute[size - k]).abs() / scale;
            worst = worst.max(rel_e).max(rel_c);
            ensure(rel_e < 1e-9 && rel_c < 1e-9, || {
                format!("case {case} k={k}: residuals {rel_e:e} {rel_c:e} for {values:?}")
            })?;
        }
    }
    Ok(format!("1000 value sets, worst relative residual {worst:.2e}"))
}

fn criterion_3() -> Verdict {
    let tol = Tolerance::default();
    let mut worst: f64 = 0.0;
    for (i, c) in shared_configs().iter().enumerate() {
        let (p1, p2) = (&c.p1, &c.p2);
        let n = p1.n();
        let bound = 1e-9 * p1.circumradius().max(p2.circumradius());
        let sol = equal_distance_points(p1, p2, &tol).map_err(|e| e.to_string())?;
        let SolutionPoints::Pair { m1, m2 } = sol.points else {
            return Err(format!("config {i}: expected two points, got {:?}", sol.points));
        };
        let (va, vb) = (raw_vertices(p1), raw_vertices(p2));
        let at = |m: Point, pairing: &dyn Fn(usize) -> usize| {
            (1..=n)
                .map(|k| (m.distance(va[k - 1]) - m.distance(vb[pairing(k) - 1])).abs())
                .fold(0.0, f64::max)
        };
        let r1 = at(m1, &|k| k);
        let r2 = at(m2, &|k| reversed(k, n));
        worst = worst.max(r1 / bound).max(r2 / bound);
        ensure(r1 < bound && r2 < bound, || {
            format!("config {i}: residuals {r1:e} {r2:e} bound {bound:e}")
        })?;
        let k1 = correspondence(p1, p2, m1, &tol).map_err(|e| format!("config {i}: {e}"))?;
        let k2 = correspondence(p1, p2, m2, &tol).map_err(|e| format!("config {i}: {e}"))?;
        ensure(
            k1.kind == MatchingKind::Identity && k2.kind == MatchingKind::Reversal,
            || format!("config {i}: matchings {:?} {:?}", k1.kind, k2.kind),
        )?;
        ensure(k1.max_residual() < bound && k2.max_residual() < bound, || {
            format!(
                "config {i}: library residuals {:e} {:e}",
                k1.max_residual(),
                k2.max_residual()
            )
        })?;
    }
    Ok(format!("1000 pairs, worst residual {worst:.2e} of bound"))
}

fn criterion_4() -> Verdict {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut smallest_violation = f64::INFINITY;
    for (i, c) in shared_configs().iter().enumerate() {
        let (p1, p2) = (&c.p1, &c.p2);
        let sol = equal_distance_points(p1, p2, &tol).map_err(|e| e.to_string())?;
        let (m1, m2) = (sol.m1().ok_or("missing M1")?, sol.m2().ok_or("missing M2")?);
        for m in [m1, m2] {
            let da = distances_squared(&raw_vertices(p1), m);
            let db = distances_squared(&raw_vertices(p2), m);
            let rep = verify_system_star(&da, &db, &tol).map_err(|e| e.to_string())?;
            ensure(rep.passed, || {
                format!("config {i}: system fails at solution, {:e}", rep.max_residual())
            })?;
        }
        let margin = 0.05 * p1.circumradius().max(p2.circumradius());
        let probe = point_avoiding(&mut rng, 15.0, &[m1, m2], margin);
        let da = distances_squared(&raw_vertices(p1), probe);
        let db = distances_squared(&raw_vertices(p2), probe);
        let rep = verify_system_star(&da, &db, &tol).map_err(|e| e.to_string())?;
        smallest_violation = smallest_violation.min(rep.max_residual());
        ensure(!rep.passed, || {
            format!("config {i}: system holds at non-solution {probe:?}")
        })?;
    }
    Ok(format!(
        "2000 solution points pass, 1000 non-solution points fail (smallest violation {smallest_violation:.2e})"
    ))
}

fn system_holds(p1: &RegularPolygon, p2: &RegularPolygon, m: Point, tol: &Tolerance) -> Result<bool, String> {
    let da = distances_squared(&raw_vertices(p1), m);
    let db = distances_squared(&raw_vertices(p2), m);
    Ok(verify_system_star(&da, &db, tol).map_err(|e| e.to_string())?.passed)
}

fn criterion_5() -> Verdict {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for i in 0..500 {
        let n = rng.random_range(3..=12);
        let (p1, p2) = congruent_same_centroid(&mut rng, n);
        let sol = equal_distance_points(&p1, &p2, &tol).map_err(|e| e.to_string())?;
        ensure(sol.locus == Some(Locus::EntirePlane), || {
            format!("same-centroid {i}: locus {:?}", sol.locus)
        })?;
        for _ in 0..4 {
            let m = Point::new(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0));
            ensure(system_holds(&p1, &p2, m, &tol)?, || {
                format!("same-centroid {i}: fails at {m:?}")
            })?;
        }
    }
    let mut off_checked = 0;
    for i in 0..500 {
        let n = rng.random_range(3..=12);
        let (p1, p2) = congruent_mirror_pair(&mut rng, n);
        let (o1, o2) = (p1.centroid(), p2.centroid());
        let sol = equal_distance_points(&p1, &p2, &tol).map_err(|e| e.to_string())?;
        ensure(matches!(sol.locus, Some(Locus::PerpendicularBisector { .. })), || {
            format!("mirror {i}: locus {:?}", sol.locus)
        })?;
        let mid = o1.midpoint(o2);
        let along = (o2 - o1) * (1.0 / o1.distance(o2));
        let across = Point::new(-along.y, along.x);
        for _ in 0..4 {
            let on = mid + across * rng.random_range(-20.0..20.0);
            ensure(system_holds(&p1, &p2, on, &tol)?, || {
                format!("mirror {i}: fails on bisector at {on:?}")
            })?;
            let shift = rng.random_range(0.05..1.0) * o1.distance(o2) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            let off = on + along * shift;
            ensure(!system_holds(&p1, &p2, off, &tol)?, || {
                format!("mirror {i}: holds off bisector at {off:?}")
            })?;
            off_checked += 1;
        }
    }
    Ok(format!(
        "500 same-centroid + 500 mirrored pairs pass on their loci; {off_checked} off-bisector points fail"
    ))
}

fn criterion_6() -> Verdict {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let mut worst: f64 = 0.0;
    for i in 0..500 {
        let n = rng.random_range(3..=12);
        let (p1, p2) = intersecting_pair(&mut rng, n);
        let sol = equal_distance_points(&p1, &p2, &tol).map_err(|e| e.to_string())?;
        let SolutionPoints::Pair { m1, m2 } = sol.points else {
            return Err(format!("pair {i}: expected two points, got {:?}", sol.points));
        };
        for m in [m1, m2] {
            let d1 = m.distance(p1.vertex(1));
            let candidates = align_rotation(&p2, m, d1, &tol).map_err(|e| format!("pair {i}: {e}"))?;
            let mut a: Vec<f64> = raw_vertices(&p1).iter().map(|v| v.distance_squared(m)).collect();
            a.sort_by(f64::total_cmp);
            let scale = a[n - 1];
            let mut best = f64::INFINITY;
            for c in &candidates {
                let mut b: Vec<f64> = raw_vertices(c).iter().map(|v| v.distance_squared(m)).collect();
                b.sort_by(f64::total_cmp);
                let sorted_residual = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
                let cmp = multisets_equal(
                    &distances_squared(p1.vertices().as_slice(), m),
                    &distances_squared(c.vertices().as_slice(), m),
                    &tol,
                )
                .map_err(|e| e.to_string())?;
                if cmp.equal && cmp.max_residual < 1e-9 * scale && sorted_residual < 1e-9 * scale {
                    best = best.min(sorted_residual / scale);
                }
            }
            ensure(best.is_finite(), || format!("pair {i}: no aligned candidate at {m:?}"))?;
            worst = worst.max(best);
        }
    }
    Ok(format!(
        "500 pairs aligned at both points, worst relative residual {worst:.2e}"
    ))
}

fn criterion_7() -> Verdict {
    let tol = Tolerance::default();
    let mut worst: f64 = 0.0;
    for (i, c) in shared_configs().iter().enumerate() {
        let (p1, p2) = (&c.p1, &c.p2);
        let scale = p1.circumradius() + p2.circumradius();
        let sol = equal_distance_points(p1, p2, &tol).map_err(|e| e.to_string())?;
        let rep = verify_point_properties(p1, p2, &sol, &tol).map_err(|e| format!("config {i}: {e}"))?;
        for check in rep.checks() {
            let limit = if check.name.starts_with("perpendicularity") {
                1e-9 * scale * scale
            } else {
                1e-9 * scale
            };
            let ok = match check.status {
                CheckStatus::Pass => check.residual < limit,
                CheckStatus::NotApplicable => check.name == "property1_midpoint" && p1.n() % 2 == 1,
                _ => false,
            };
            worst = worst.max(check.residual / limit);
            ensure(ok, || {
                format!(
                    "config {i}: {} {:?} residual {:e}",
                    check.name, check.status, check.residual
                )
            })?;
        }
        // antipodes and M1 from raw coordinates
        let d1 = p1.centroid() * 2.0 - c.vertex;
        let d2 = p2.centroid() * 2.0 - c.vertex;
        let m1 = sol.m1().ok_or("missing M1")?;
        ensure(m1.distance(d1.midpoint(d2)) < 1e-9 * scale, || {
            format!("config {i}: M1 not midpoint of D1D2")
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(70);
    for i in 0..200 {
        let n = rng.random_range(3..=12);
        let a1 = Point::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let u = Point::polar(rng.random_range(-PI..PI));
        let r1: f64 = rng.random_range(0.5..10.0);
        let mut r2: f64 = rng.random_range(0.5..10.0);
        while (r1 - r2).abs() < 0.01 * r1.max(r2) {
            r2 = rng.random_range(0.5..10.0);
        }
        // external (A1 between the centroids) or internal (same ray) tangency
        let sign = if i % 2 == 0 { -1.0 } else { 1.0 };
        let o = if rng.random_bool(0.5) {
            Orientation::Ccw
        } else {
            Orientation::Cw
        };
        let p1 = RegularPolygon::from_shared_vertex(a1, a1 + u * r1, n, o).map_err(|e| e.to_string())?;
        let p2 =
            RegularPolygon::from_shared_vertex(a1, a1 + u * (sign * r2), n, o.opposite()).map_err(|e| e.to_string())?;
        let sol = equal_distance_points(&p1, &p2, &tol).map_err(|e| format!("tangent {i}: {e}"))?;
        let SolutionPoints::Coincident(m) = sol.points else {
            return Err(format!("tangent {i}: expected one point, got {:?}", sol.points));
        };
        let expected = p1.centroid() + p2.centroid() - a1;
        let scale = r1 + r2;
        ensure(m.distance(expected) < 1e-6 * scale, || {
            format!("tangent {i}: point {m:?} vs {expected:?}")
        })?;
        let rep = verify_point_properties(&p1, &p2, &sol, &tol).map_err(|e| format!("tangent {i}: {e}"))?;
        ensure(rep.coincident && rep.all_ok(), || format!("tangent {i}: {rep:?}"))?;
    }
    Ok(format!(
        "six checks on 1000 pairs, worst residual {worst:.2e} of bound; 200 tangent configurations give one point"
    ))
}

/// Far corner of the square on `apex → base_vertex`, away from `away`.
fn far_square_corner(apex: Point, base_vertex: Point, away: Point) -> Point {
    let edge = base_vertex - apex;
    let w = Point::new(-edge.y, edge.x);
    let w = if w.dot(away - base_vertex) > 0.0 { -w } else { w };
    base_vertex + w
}

fn criterion_8() -> Verdict {
    let (an, bn) = (Point::new(0.0, 0.0), Point::new(2.0, 0.0));
    let base = 2.0;
    let mut worst_dev: f64 = 0.0;
    for (n, apexes) in bottema_configs() {
        let cot = 1.0 / (PI / n as f64).tan();
        let oracle = Point::new(1.0, cot);
        let library = closed_form_midpoint(an, bn, n, Side::Left).map_err(|e| e.to_string())?;
        ensure(library.distance(oracle) < 1e-9 * base, || {
            format!("n={n}: closed form {library:?} vs {oracle:?}")
        })?;
        let mut centers = Vec::new();
        for a1 in apexes {
            let (s1, s2) = exterior_sides(an, a1, bn);
            let r = bottema_construct(an, a1, bn, n, s1, s2).map_err(|e| format!("n={n}: {e}"))?;
            ensure(r.m1.distance(library) < 1e-9 * base, || {
                format!("n={n} apex {a1:?}: m1 {:?}", r.m1)
            })?;
            let alt = measured_altitude(&r).map_err(|e| e.to_string())?;
            ensure((alt - 0.5 * base * cot).abs() < 1e-9, || {
                format!("n={n} apex {a1:?}: altitude {alt}")
            })?;
            ensure(r.h.distance(Point::new(1.0, 0.0)) < 1e-9, || {
                format!("n={n}: foot {:?}", r.h)
            })?;
            if n == 4 {
                let c1 = far_square_corner(a1, an, bn);
                let c2 = far_square_corner(a1, bn, an);
                ensure(r.m1.distance(c1.midpoint(c2)) < 1e-9 * base, || {
                    format!("square oracle at apex {a1:?}")
                })?;
            }
            centers.push(r.m1);
        }
        for (i, p) in centers.iter().enumerate() {
            for q in &centers[i + 1..] {
                worst_dev = worst_dev.max(p.distance(*q));
            }
        }
        ensure(worst_dev < 1e-9 * base, || format!("n={n}: deviation {worst_dev:e}"))?;
    }
    Ok(format!("n=3..12 x 100 apexes, max M1 deviation {worst_dev:.2e}"))
}

fn criterion_9() -> Verdict {
    let (an, bn) = (Point::new(0.0, 0.0), Point::new(2.0, 0.0));
    let mut worst: f64 = 0.0;
    let mut rows = 0;
    for (n, apexes) in bottema_configs() {
        for a1 in apexes {
            let (s1, s2) = exterior_sides(an, a1, bn);
            let r = bottema_construct(an, a1, bn, n, s1, s2).map_err(|e| e.to_string())?;
            let (va, vb) = (raw_vertices(&r.poly1), raw_vertices(&r.poly2));
            let table = vertex_angles(&r).map_err(|e| e.to_string())?;
            for k in 2..=n {
                let theta = 2.0 * PI * (k as f64 - 1.0) / n as f64;
                let expected = theta.min(2.0 * PI - theta);
                let (u, v) = (va[k - 1] - r.m1, vb[k - 1] - r.m1);
                let measured = u.cross(v).abs().atan2(u.dot(v));
                let row = &table.rows[k - 2];
                let err = (measured - expected).abs().max((row.measured - expected).abs());
                worst = worst.max(err);
                rows += 1;
                ensure(err < 1e-9, || format!("n={n} k={k} apex {a1:?}: angle error {err:e}"))?;
            }
        }
    }
    Ok(format!("{rows} angles, worst error {worst:.2e} rad"))
}

fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenarios")
        .join(name)
}

fn twogon(args: &[&str]) -> Result<Output, String> {
    Command::new(env!("CARGO_BIN_EXE_twogon"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn criterion_10() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| scenario_path(name).to_string_lossy().into_owned();

    let o = twogon(&["verify", &path("shared_squares.json")])?;
    ensure(code(&o) == 0 && stdout(&o).contains("result: PASS"), || {
        format!("verify squares: {}", stdout(&o))
    })?;
    ensure(stdout(&o).contains("point M1: (-1.000000000, 3.000000000)"), || {
        "verify squares: M1".into()
    })?;

    let o = twogon(&["verify", "--json", &path("shared_squares.json")])?;
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| format!("verify --json: {e}"))?;
    ensure(code(&o) == 0 && json["passed"] == true, || {
        "verify --json passed".into()
    })?;
    let kinds: Vec<&str> = json["matchings"]
        .as_array()
        .ok_or("matchings")?
        .iter()
        .filter_map(|m| m["kind"].as_str())
        .collect();
    ensure(kinds == ["identity", "reversal"], || {
        format!("verify --json matchings {kinds:?}")
    })?;
    for c in json["checks"].as_array().ok_or("checks")? {
        ensure(c["residual"].is_number() && c["bound"].is_number(), || {
            format!("check without residual: {c}")
        })?;
    }

    let o = twogon(&["verify", &path("disjoint_pair.json")])?;
    ensure(code(&o) == 0 && stdout(&o).contains("no equal-distance point"), || {
        "disjoint pair".into()
    })?;
    let o = twogon(&["verify", &path("shared_hexagons_same_orientation.json")])?;
    ensure(code(&o) == 1, || {
        format!("failing checks should exit 1, got {}", code(&o))
    })?;

    let bad = [
        (
            "n2.json",
            r#"{"kind": "identity_check", "n": 2, "identity_check": {"centroid": [0, 0], "r": 1, "phase": 0, "orient": 1, "probes": [[1, 1]]}}"#,
        ),
        (
            "truncated.json",
            r#"{"kind": "shared_vertex", "n": 4, "shared_vertex": {"vertex": [0, "#,
        ),
        (
            "unknown.json",
            r#"{"kind": "identity_check", "n": 4, "color": "red", "identity_check": {"centroid": [0, 0], "r": 1, "phase": 0, "orient": 1, "probes": [[1, 1]]}}"#,
        ),
        (
            "degenerate.json",
            r#"{"kind": "bottema", "n": 4, "bottema": {"an": [0, 0], "a1": [0, 0], "bn": [2, 0]}}"#,
        ),
    ];
    for (name, text) in bad {
        let p = dir.path().join(name);
        std::fs::write(&p, text).map_err(|e| e.to_string())?;
        let o = twogon(&["verify", &p.to_string_lossy()])?;
        ensure(code(&o) == 2, || format!("{name}: expected exit 2, got {}", code(&o)))?;
    }
    let o = twogon(&["verify", "/nonexistent/scenario.json"])?;
    ensure(code(&o) == 2, || "missing file should exit 2".into())?;
    let o = twogon(&["--tolerance-rel", "-1", "verify", &path("shared_squares.json")])?;
    ensure(code(&o) == 2, || "negative tolerance should exit 2".into())?;

    let mut svgs = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("squares{run}.svg"));
        let o = twogon(&["render", &path("shared_squares.json"), "-o", &out.to_string_lossy()])?;
        ensure(code(&o) == 0, || "render squares".into())?;
        svgs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(svgs[0] == svgs[1], || "render not byte-stable".into())?;
    let svg = String::from_utf8(svgs[0].clone()).map_err(|e| e.to_string())?;
    let count = |needle: &str| svg.matches(needle).count();
    ensure(
        count("<polygon") == 2 && count("<circle") == 4 && count("class=\"label solution\"") == 2,
        || {
            format!(
                "squares svg counts {} {} {}",
                count("<polygon"),
                count("<circle"),
                count("class=\"label solution\"")
            )
        },
    )?;

    let out = dir.path().join("bottema.svg");
    let o = twogon(&["render", &path("bottema_square.json"), "-o", &out.to_string_lossy()])?;
    ensure(code(&o) == 0, || "render bottema".into())?;
    let svg = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let count = |needle: &str| svg.matches(needle).count();
    ensure(
        count("class=\"triangle\"") == 1
            && count("class=\"ngon\"") == 2
            && count("class=\"d1d2\"") == 1
            && count("class=\"marker m1\"") == 1,
        || "bottema svg element counts".into(),
    )?;

    let args = [
        "sweep",
        "--kind",
        "shared-vertex",
        "--n",
        "3..6",
        "--count",
        "25",
        "--seed",
        "5",
    ];
    let (a, b) = (twogon(&args)?, twogon(&args)?);
    ensure(code(&a) == 0 && a.stdout == b.stdout, || {
        format!("sweep: {}", stdout(&a))
    })?;
    for kind in ["pair", "bottema", "identity-check"] {
        let o = twogon(&["sweep", "--kind", kind, "--n", "3..8", "--count", "10", "--seed", "2"])?;
        ensure(code(&o) == 0, || format!("sweep {kind}: {}", stdout(&o)))?;
    }
    let o = twogon(&["bottema", "--an", "0,0", "--bn", "2,0", "--n", "6", "--samples", "100"])?;
    ensure(code(&o) == 0 && stdout(&o).contains("result: PASS"), || {
        format!("bottema verb: {}", stdout(&o))
    })?;
    let o = twogon(&[
        "bottema",
        "--an",
        "-1.5,2",
        "--bn",
        "3,-0.25",
        "--n",
        "9",
        "--samples",
        "50",
        "--json",
    ])?;
    ensure(code(&o) == 0, || {
        format!("bottema verb with negative coordinates: {}", stdout(&o))
    })?;

    let mut roundtrips = 0;
    let mut texts: Vec<String> = std::fs::read_dir(scenario_path(""))
        .map_err(|e| e.to_string())?
        .map(|e| std::fs::read_to_string(e.map_err(|e| e.to_string())?.path()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let tol = Tolerance::default();
    for (i, kind) in [Kind::Pair, Kind::SharedVertex, Kind::Bottema, Kind::IdentityCheck]
        .into_iter()
        .cycle()
        .take(200)
        .enumerate()
    {
        let doc = random_scenario(kind, 3 + i % 10, i as u64, &tol);
        texts.push(validate(doc).map_err(|e| e.to_string())?.to_json());
    }
    for text in &texts {
        let s = parse_scenario(text).map_err(|e| e.to_string())?;
        let once = s.to_json();
        let again = parse_scenario(&once).map_err(|e| e.to_string())?;
        ensure(again == s && again.to_json() == once, || {
            format!("roundtrip differs for {text}")
        })?;
        roundtrips += 1;
    }
    Ok(format!(
        "verbs, exit codes 0/1/2, byte-stable SVG, {roundtrips} exact roundtrips"
    ))
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

fn main() -> ExitCode {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            title: "power-sum identity",
            budget: secs(5),
            run: criterion_1,
        },
        Criterion {
            id: 2,
            title: "Newton identities vs expansion",
            budget: secs(1),
            run: criterion_2,
        },
        Criterion {
            id: 3,
            title: "shared-vertex two points",
            budget: secs(5),
            run: criterion_3,
        },
        Criterion {
            id: 4,
            title: "system (*) necessity",
            budget: secs(10),
            run: criterion_4,
        },
        Criterion {
            id: 5,
            title: "congruent cases",
            budget: secs(5),
            run: criterion_5,
        },
        Criterion {
            id: 6,
            title: "rotation alignment",
            budget: secs(5),
            run: criterion_6,
        },
        Criterion {
            id: 7,
            title: "M1/M2 properties",
            budget: None,
            run: criterion_7,
        },
        Criterion {
            id: 8,
            title: "generalized Bottema",
            budget: secs(5),
            run: criterion_8,
        },
        Criterion {
            id: 9,
            title: "Bottema angle table",
            budget: None,
            run: criterion_9,
        },
        Criterion {
            id: 10,
            title: "CLI contract",
            budget: None,
            run: criterion_10,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (verdict, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:.0?}")),
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({elapsed:.2?}): {detail}", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({elapsed:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
