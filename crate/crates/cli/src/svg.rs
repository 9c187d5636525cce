//! Deterministic SVG output. Geometry is drawn inside a group that flips
//! the y axis, so coordinates are written in mathematical orientation;
//! labels sit outside the group so the text stays upright.

use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use poristic::kernel::circle_circle_intersection;
use poristic::porism::euler_prime;
use poristic::{CentralConic, Circle, ConicKind, GeneralizedCircle, Line, Point};

use crate::error::CliError;
use crate::report::Report;
use crate::scene::ValidScene;

/// Samples per conic branch.
pub const CONIC_SAMPLES: usize = 512;

const INK: &str = "#1a1a1a";
const BORDEAUX: &str = "#800020";
const CONIC: &str = "#1f5fa8";
const FERTILE: &str = "#2e8b57";

/// Fixed-point number text; never `-0.000000`.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.strip_prefix('-')
        .is_some_and(|rest| rest.bytes().all(|b| b == b'0' || b == b'.'))
    {
        s[1..].to_owned()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min: Point,
    max: Point,
}

impl Bounds {
    fn of_circle(c: &Circle) -> Self {
        let r = Point::new(c.radius(), c.radius());
        Self {
            min: c.center() - r,
            max: c.center() + r,
        }
    }

    fn union(self, o: Bounds) -> Self {
        Self {
            min: Point::new(self.min.x.min(o.min.x), self.min.y.min(o.min.y)),
            max: Point::new(self.max.x.max(o.max.x), self.max.y.max(o.max.y)),
        }
    }

    fn include(self, p: Point) -> Self {
        self.union(Bounds { min: p, max: p })
    }

    fn padded(self, fraction: f64) -> Self {
        let pad = fraction * (self.max.x - self.min.x).max(self.max.y - self.min.y);
        let d = Point::new(pad, pad);
        Self {
            min: self.min - d,
            max: self.max + d,
        }
    }

    fn extent(&self) -> f64 {
        (self.max.x - self.min.x).max(self.max.y - self.min.y)
    }
}

struct Style {
    stroke: f64,
}

impl Style {
    fn attrs(&self, class: &str, color: &str, weight: f64) -> String {
        format!(
            r#"class="{class}" fill="none" stroke="{color}" stroke-width="{}""#,
            num(self.stroke * weight)
        )
    }
}

fn circle_el(out: &mut String, c: &Circle, attrs: &str) {
    let _ = writeln!(
        out,
        r#"    <circle cx="{}" cy="{}" r="{}" {attrs}/>"#,
        num(c.center().x),
        num(c.center().y),
        num(c.radius())
    );
}

fn line_el(out: &mut String, l: &Line, half_len: f64, attrs: &str) {
    let foot = l.foot(Point::ORIGIN);
    let (p, q) = (
        foot - l.direction() * half_len,
        foot + l.direction() * half_len,
    );
    let _ = writeln!(
        out,
        r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" {attrs}/>"#,
        num(p.x),
        num(p.y),
        num(q.x),
        num(q.y)
    );
}

fn polyline_el(out: &mut String, pts: &[Point], attrs: &str) {
    let coords = pts
        .iter()
        .map(|p| format!("{},{}", num(p.x), num(p.y)))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, r#"    <polyline points="{coords}" {attrs}/>"#);
}

fn conic_branches(k: &CentralConic, reach: f64) -> Vec<Vec<Point>> {
    let last = (CONIC_SAMPLES - 1) as f64;
    match k.kind() {
        ConicKind::Ellipse => {
            vec![(0..CONIC_SAMPLES)
                .map(|i| k.point_at(TAU * i as f64 / last, true))
                .collect()]
        }
        ConicKind::Hyperbola => {
            // far enough along each branch to leave the picture
            let t_max = (reach / k.semi_major()).max(1.5).acosh();
            [true, false]
                .into_iter()
                .map(|branch| {
                    (0..CONIC_SAMPLES)
                        .map(|i| k.point_at(-t_max + 2.0 * t_max * i as f64 / last, branch))
                        .collect()
                })
                .collect()
        }
    }
}

fn arc_path(out: &mut String, c: &Circle, start: f64, end: f64, attrs: &str) {
    let len = end - start;
    if len <= 0.0 {
        return;
    }
    // a single elliptical-arc command cannot draw a full turn
    if len > PI {
        let mid = start + 0.5 * len;
        arc_path(out, c, start, mid, attrs);
        arc_path(out, c, mid, end, attrs);
        return;
    }
    let (p, q) = (c.point_at(start), c.point_at(end));
    let r = num(c.radius());
    let _ = writeln!(
        out,
        r#"    <path d="M {} {} A {r} {r} 0 0 1 {} {}" {attrs}/>"#,
        num(p.x),
        num(p.y),
        num(q.x),
        num(q.y)
    );
}

/// Renders the scene and whatever the report carries (triangles, fertile
/// arcs, i-conic) as a standalone SVG 1.1 document.
pub fn render(scene: &ValidScene, report: &Report) -> Result<String, CliError> {
    let (c, e) = (&scene.circumcircle, &scene.euler_circle);
    let prime = euler_prime(c, e).ok();
    let mut triangles = report.triangles()?;
    if triangles.is_empty() {
        triangles.extend(scene.triangle);
    }
    let arcs = report.arcs.as_ref().map(|a| a.to_arc_set()).transpose()?;
    let conic = report.conic.as_ref().map(|k| k.to_conic()).transpose()?;
    let markers = match circle_circle_intersection(c, e) {
        Ok(points) if points.len() == 2 => points,
        _ => Vec::new(),
    };

    let mut bounds = Bounds::of_circle(c).union(Bounds::of_circle(e));
    if let Some(GeneralizedCircle::Circle(p)) = &prime {
        bounds = bounds.union(Bounds::of_circle(p));
    }
    for v in triangles.iter().flat_map(|t| t.vertices()) {
        bounds = bounds.include(v);
    }
    let view = bounds.padded(0.1);
    let extent = view.extent();
    let style = Style {
        stroke: extent * 0.003,
    };
    let reach = view.min.dist(view.max)
        + conic.map_or(0.0, |k| k.center().dist(view.min.midpoint(view.max)));

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="800" height="{}">"#,
        num(view.min.x),
        num(-view.max.y),
        num(view.max.x - view.min.x),
        num(view.max.y - view.min.y),
        num(800.0 * (view.max.y - view.min.y) / (view.max.x - view.min.x))
    );
    out.push_str("  <g transform=\"scale(1,-1)\">\n");

    circle_el(&mut out, c, &style.attrs("circumcircle", INK, 1.0));
    circle_el(&mut out, e, &style.attrs("euler-circle", BORDEAUX, 1.0));
    let dash = format!(
        r#" stroke-dasharray="{} {}""#,
        num(4.0 * style.stroke),
        num(3.0 * style.stroke)
    );
    match &prime {
        Some(GeneralizedCircle::Circle(p)) => circle_el(
            &mut out,
            p,
            &(style.attrs("euler-prime", BORDEAUX, 0.8) + &dash),
        ),
        Some(GeneralizedCircle::Line(l)) => line_el(
            &mut out,
            l,
            extent,
            &(style.attrs("euler-prime", BORDEAUX, 0.8) + &dash),
        ),
        None => {}
    }
    for t in &triangles {
        let pts = t
            .vertices()
            .map(|v| format!("{},{}", num(v.x), num(v.y)))
            .join(" ");
        let _ = writeln!(
            out,
            r#"    <polygon points="{pts}" {}/>"#,
            style.attrs("triangle", INK, 1.0)
        );
    }
    if let Some(k) = &conic {
        for branch in conic_branches(k, reach) {
            polyline_el(&mut out, &branch, &style.attrs("iconic", CONIC, 1.0));
        }
    }
    if let Some(arcs) = arcs.as_ref().filter(|a| !a.is_full()) {
        for arc in &arcs.arcs {
            arc_path(
                &mut out,
                &arcs.circle,
                arc.start,
                arc.end,
                &style.attrs("fertile-arc", FERTILE, 3.0),
            );
        }
    }
    let marker_r = extent * 0.008;
    for p in &markers {
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{}" class="intersection" fill="{BORDEAUX}"/>"#,
            num(p.x),
            num(p.y),
            num(marker_r)
        );
    }
    out.push_str("  </g>\n");
    let font = extent * 0.035;
    for (i, p) in markers.iter().enumerate() {
        // push the label outward from the circumcenter
        let away = (*p - c.center())
            .normalized()
            .unwrap_or(Point::new(1.0, 0.0))
            * (2.5 * font);
        let at = *p + away;
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="{}" text-anchor="middle" fill="{BORDEAUX}">P{}</text>"#,
            num(at.x),
            num(-at.y + 0.35 * font),
            num(font),
            i + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
