//! Standalone SVG 1.1 figures.
//!
//! World coordinates are y-up; the document flips y and fits a viewBox
//! around every shape with 10 % padding. Numbers are printed with six
//! decimals so output is byte-stable.

use std::fmt::Write as _;

use twogon_core::bottema::{bottema_construct, exterior_sides};
use twogon_core::{Point, RegularPolygon};

use crate::report::Report;
use crate::scenario::{Params, Scenario};

const WIDTH_PX: f64 = 800.0;

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324", "#469990", "#800000",
    "#808000", "#000075",
];

const POLY1: &str = "#1f4e79";
const POLY2: &str = "#7f3b08";
const AUX: &str = "#777777";

enum Shape {
    Polygon {
        points: Vec<Point>,
        class: &'static str,
        stroke: &'static str,
        dashed: bool,
    },
    Circle {
        center: Point,
        radius: f64,
        class: &'static str,
        stroke: &'static str,
        dashed: bool,
    },
    Line {
        a: Point,
        b: Point,
        class: &'static str,
        stroke: &'static str,
    },
    Marker {
        at: Point,
        class: &'static str,
    },
    Label {
        at: Point,
        text: String,
        class: &'static str,
    },
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

#[derive(Default)]
struct Figure {
    shapes: Vec<Shape>,
}

impl Figure {
    fn polygon(&mut self, poly: &RegularPolygon, class: &'static str, stroke: &'static str, dashed: bool) {
        self.shapes.push(Shape::Polygon {
            points: poly.vertices().into_vec(),
            class,
            stroke,
            dashed,
        });
    }

    fn circle(&mut self, center: Point, radius: f64, class: &'static str, stroke: &'static str, dashed: bool) {
        self.shapes.push(Shape::Circle {
            center,
            radius,
            class,
            stroke,
            dashed,
        });
    }

    fn line(&mut self, a: Point, b: Point, class: &'static str, stroke: &'static str) {
        self.shapes.push(Shape::Line { a, b, class, stroke });
    }

    fn labeled(&mut self, at: Point, text: &str, class: &'static str) {
        self.shapes.push(Shape::Marker { at, class });
        self.shapes.push(Shape::Label {
            at,
            text: text.to_string(),
            class,
        });
    }

    /// Segments from `m` to `A_k` and its partner `B_j`, colored per pair.
    fn paired_segments(&mut self, m: Point, p1: &RegularPolygon, p2: &RegularPolygon, partners: &[usize]) {
        for (i, &j) in partners.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            self.line(m, p1.vertex(i + 1), "pair-segment", color);
            self.line(m, p2.vertex(j), "pair-segment", color);
        }
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut add = |p: Point, pad: f64| {
            b.0 = b.0.min(p.x - pad);
            b.1 = b.1.min(p.y - pad);
            b.2 = b.2.max(p.x + pad);
            b.3 = b.3.max(p.y + pad);
        };
        for s in &self.shapes {
            match s {
                Shape::Polygon { points, .. } => points.iter().for_each(|p| add(*p, 0.0)),
                Shape::Circle { center, radius, .. } => add(*center, *radius),
                Shape::Line { a, b, .. } => {
                    add(*a, 0.0);
                    add(*b, 0.0);
                }
                Shape::Marker { at, .. } | Shape::Label { at, .. } => add(*at, 0.0),
            }
        }
        if !b.0.is_finite() {
            return (-1.0, -1.0, 1.0, 1.0);
        }
        b
    }

    fn render(&self, title: &str) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let (w, h) = ((x1 - x0).max(span * 0.05), (y1 - y0).max(span * 0.05));
        let (px, py) = (0.1 * w, 0.1 * h);
        let (vx, vy, vw, vh) = (x0 - px, -(y1 + py), w + 2.0 * px, h + 2.0 * py);
        let stroke = span * 0.004;
        let marker = span * 0.012;
        let font = span * 0.035;

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
            num(WIDTH_PX),
            num(WIDTH_PX * vh / vw),
            num(vx),
            num(vy),
            num(vw),
            num(vh)
        );
        let _ = writeln!(out, "<title>{title}</title>");
        let _ = writeln!(
            out,
            "<rect class=\"background\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
            num(vx),
            num(vy),
            num(vw),
            num(vh)
        );
        let dash = format!(" stroke-dasharray=\"{} {}\"", num(4.0 * stroke), num(3.0 * stroke));
        for s in &self.shapes {
            match s {
                Shape::Polygon {
                    points,
                    class,
                    stroke: color,
                    dashed,
                } => {
                    let pts: Vec<String> = points.iter().map(|p| format!("{},{}", num(p.x), num(-p.y))).collect();
                    let _ = writeln!(
                        out,
                        "<polygon class=\"{class}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"{}/>",
                        pts.join(" "),
                        num(stroke * 1.5),
                        if *dashed { dash.as_str() } else { "" }
                    );
                }
                Shape::Circle {
                    center,
                    radius,
                    class,
                    stroke: color,
                    dashed,
                } => {
                    let _ = writeln!(
                        out,
                        "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"{}/>",
                        num(center.x),
                        num(-center.y),
                        num(*radius),
                        num(stroke),
                        if *dashed { dash.as_str() } else { "" }
                    );
                }
                Shape::Line {
                    a,
                    b,
                    class,
                    stroke: color,
                } => {
                    let _ = writeln!(
                        out,
                        "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{}\"/>",
                        num(a.x),
                        num(-a.y),
                        num(b.x),
                        num(-b.y),
                        num(stroke)
                    );
                }
                Shape::Marker { at, class } => {
                    let (x, y) = (at.x, -at.y);
                    let _ = writeln!(
                        out,
                        "<path class=\"marker {class}\" d=\"M {} {} L {} {} L {} {} L {} {} Z\" fill=\"#000000\"/>",
                        num(x),
                        num(y - marker),
                        num(x + marker),
                        num(y),
                        num(x),
                        num(y + marker),
                        num(x - marker),
                        num(y)
                    );
                }
                Shape::Label { at, text, class } => {
                    let _ = writeln!(
                        out,
                        "<text class=\"label {class}\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\">{text}</text>",
                        num(at.x + marker * 1.2),
                        num(-at.y - marker * 1.2),
                        num(font)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Draws the scenario geometry together with the points and matchings of `report`.
pub fn render_svg(scenario: &Scenario, report: &Report) -> String {
    let mut fig = Figure::default();
    match &scenario.params {
        Params::Pair { p1, p2 } | Params::SharedVertex { p1, p2, .. } => {
            fig.polygon(p1, "polygon1", POLY1, false);
            fig.polygon(p2, "polygon2", POLY2, false);
            fig.circle(p1.centroid(), p1.circumradius(), "circumcircle", POLY1, false);
            fig.circle(p2.centroid(), p2.circumradius(), "circumcircle", POLY2, false);
            match report.classification {
                Some("non_congruent") => {
                    fig.circle(p2.centroid(), p1.circumradius(), "omega1", AUX, true);
                    fig.circle(p1.centroid(), p2.circumradius(), "omega2", AUX, true);
                }
                Some("congruent_distinct_centroids") => {
                    let (o1, o2) = (p1.centroid(), p2.centroid());
                    let mid = o1.midpoint(o2);
                    let dir = (o2 - o1).perp() * ((p1.circumradius() + o1.distance(o2)) / o1.distance(o2));
                    fig.line(mid - dir, mid + dir, "locus", AUX);
                }
                _ => {}
            }
            if let (Some(d1), Some(d2)) = (report.point("D1"), report.point("D2")) {
                fig.line(d1, d2, "d1d2", AUX);
                fig.labeled(d1, "D1", "aux");
                fig.labeled(d2, "D2", "aux");
            }
            for label in ["M1", "M2"] {
                let Some(m) = report.point(label) else {
                    continue;
                };
                fig.labeled(m, label, "solution");
                if let Some(mt) = report.matchings.iter().find(|mt| mt.at == label) {
                    let aligned = p2.with_phase(mt.phase2);
                    fig.paired_segments(m, p1, &aligned, &mt.partners);
                }
            }
        }
        Params::Bottema { an, a1, bn, sides, .. } => {
            fig.shapes.push(Shape::Polygon {
                points: vec![*an, *a1, *bn],
                class: "triangle",
                stroke: "#000000",
                dashed: false,
            });
            let (s1, s2) = sides.unwrap_or_else(|| exterior_sides(*an, *a1, *bn));
            if let Ok(r) = bottema_construct(*an, *a1, *bn, scenario.n, s1, s2) {
                fig.polygon(&r.poly1, "ngon", POLY1, false);
                fig.polygon(&r.poly2, "ngon", POLY2, false);
                fig.line(r.d1, r.d2, "d1d2", AUX);
                fig.line(r.m1, r.h, "altitude", AUX);
                fig.labeled(r.d1, "D1", "aux");
                fig.labeled(r.d2, "D2", "aux");
                fig.labeled(r.h, "H", "aux");
                fig.labeled(r.m1, "M1", "m1");
                if let Some(mt) = report.matchings.iter().find(|mt| mt.at == "M1") {
                    fig.paired_segments(r.m1, &r.poly1, &r.poly2, &mt.partners);
                }
            }
        }
        Params::IdentityCheck { polygon, probes, .. } => {
            fig.polygon(polygon, "polygon1", POLY1, false);
            fig.circle(polygon.centroid(), polygon.circumradius(), "circumcircle", POLY1, false);
            for (i, probe) in probes.iter().enumerate() {
                for (k, v) in polygon.vertices().iter().enumerate() {
                    fig.line(*probe, *v, "probe-segment", PALETTE[k % PALETTE.len()]);
                }
                fig.labeled(*probe, &format!("P{}", i + 1), "probe");
            }
        }
    }
    fig.render(&format!("{} n={}", scenario.kind.name(), scenario.n))
}
