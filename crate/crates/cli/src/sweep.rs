//! Randomized scenario sweeps, fanned out over a thread pool and merged by
//! configuration index.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use twogon_core::sampling::{apex_above, identity_case, intersecting_pair, shared_vertex_pair};
use twogon_core::{Point, RegularPolygon, Tolerance};

use crate::report::{run_scenario, Report};
use crate::scenario::{
    validate, BottemaDoc, IdentityCheckDoc, Kind, PairDoc, ScenarioDoc, SharedVertexDoc, ToleranceDoc,
};

/// Parses `"5"`, `"3..12"`, `"3..=12"` or `"3-12"` (all inclusive).
pub fn parse_n_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let text = text.trim();
    let (lo, hi) = if let Some((a, b)) = text.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = text.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = text.split_once('-') {
        (a, b)
    } else {
        (text, text)
    };
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start in `{text}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end in `{text}`"))?;
    if lo < 3 || hi < lo {
        return Err(format!("range `{text}` must satisfy 3 <= start <= end"));
    }
    Ok(lo..=hi)
}

fn xy(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

/// Seed for one configuration, independent of scheduling.
fn config_seed(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn pair_doc(p1: &RegularPolygon, p2: &RegularPolygon) -> PairDoc {
    PairDoc {
        centroid1: xy(p1.centroid()),
        r1: p1.circumradius(),
        phase1: p1.phase(),
        orient1: p1.orientation().as_sign(),
        centroid2: xy(p2.centroid()),
        r2: p2.circumradius(),
        phase2: p2.phase(),
        orient2: p2.orientation().as_sign(),
    }
}

/// Random scenario document of the given kind.
pub fn random_scenario(kind: Kind, n: usize, seed: u64, tol: &Tolerance) -> ScenarioDoc {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut doc = ScenarioDoc {
        kind,
        n: n as i64,
        tolerance: Some(ToleranceDoc {
            rel: tol.rel,
            abs: tol.abs,
        }),
        seed: Some(seed),
        pair: None,
        shared_vertex: None,
        bottema: None,
        identity_check: None,
    };
    match kind {
        Kind::Pair => {
            let (p1, p2) = intersecting_pair(&mut rng, n);
            doc.pair = Some(pair_doc(&p1, &p2));
        }
        Kind::SharedVertex => {
            let s = shared_vertex_pair(&mut rng, n);
            doc.shared_vertex = Some(SharedVertexDoc {
                vertex: xy(s.vertex),
                centroid1: xy(s.p1.centroid()),
                centroid2: xy(s.p2.centroid()),
                orient1: s.p1.orientation().as_sign(),
                orient2: s.p2.orientation().as_sign(),
            });
        }
        Kind::Bottema => {
            let (an, bn) = (Point::new(0.0, 0.0), Point::new(2.0, 0.0));
            let a1 = apex_above(&mut rng, an, bn);
            doc.bottema = Some(BottemaDoc {
                an: xy(an),
                a1: xy(a1),
                bn: xy(bn),
                side1: None,
                side2: None,
                sweep_samples: None,
            });
        }
        Kind::IdentityCheck => {
            let (poly, probe) = identity_case(&mut rng, n);
            let second = Point::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
            doc.identity_check = Some(IdentityCheckDoc {
                centroid: xy(poly.centroid()),
                r: poly.circumradius(),
                phase: poly.phase(),
                orient: poly.orientation().as_sign(),
                probes: vec![xy(probe), xy(second)],
                max_m: None,
            });
        }
    }
    doc
}

/// Totals for one polygon size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub count: usize,
    pub failures: usize,
    pub errors: usize,
    /// Largest `residual / bound` over all passing-or-failing checks.
    pub worst_ratio: f64,
    /// Configuration indices that did not pass.
    pub failed_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub kind: &'static str,
    pub seed: u64,
    pub rows: Vec<SweepRow>,
    pub passed: bool,
}

impl SweepSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "sweep {} seed {}", self.kind, self.seed);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "n={:<3} count {:<6} failures {:<4} errors {:<4} worst residual/bound {:.3e}",
                r.n, r.count, r.failures, r.errors, r.worst_ratio
            );
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn worst_ratio(report: &Report) -> f64 {
    report
        .checks
        .iter()
        .filter(|c| c.bound > 0.0 && c.residual.is_finite())
        .map(|c| c.residual / c.bound)
        .fold(0.0, f64::max)
}

pub fn run_sweep(kind: Kind, ns: RangeInclusive<usize>, count: usize, seed: u64, tol: &Tolerance) -> SweepSummary {
    let configs: Vec<(usize, usize)> = ns.clone().flat_map(|n| (0..count).map(move |i| (n, i))).collect();
    let outcomes: Vec<(usize, bool, bool, f64)> = configs
        .par_iter()
        .enumerate()
        .map(|(index, &(n, _))| {
            let doc = random_scenario(kind, n, config_seed(seed, index as u64), tol);
            match validate(doc) {
                Ok(s) => {
                    let r = run_scenario(&s);
                    (n, r.passed, !r.errors.is_empty(), worst_ratio(&r))
                }
                Err(_) => (n, false, true, f64::INFINITY),
            }
        })
        .collect();

    let rows: Vec<SweepRow> = ns
        .map(|n| {
            let mut row = SweepRow {
                n,
                count: 0,
                failures: 0,
                errors: 0,
                worst_ratio: 0.0,
                failed_indices: Vec::new(),
            };
            for (index, &(m, passed, error, ratio)) in outcomes.iter().enumerate() {
                if m != n {
                    continue;
                }
                row.count += 1;
                row.worst_ratio = row.worst_ratio.max(ratio);
                if error {
                    row.errors += 1;
                }
                if !passed {
                    row.failures += 1;
                    row.failed_indices.push(index);
                }
            }
            row
        })
        .collect();
    let passed = rows.iter().all(|r| r.failures == 0);
    SweepSummary {
        kind: kind.name(),
        seed,
        rows,
        passed,
    }
}
