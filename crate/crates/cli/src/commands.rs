//! The subcommands as plain functions from a validated scene to a report
//! plus exit status.

use std::f64::consts::PI;

use poristic::iconic::{
    dual_of_iconic, iconic_of_triangle, inellipse_geometry_check, is_tangent_line,
};
use poristic::porism::{
    check_pair, construct_triangle, euler_prime, family_sweep, fertile_arcs, make_poristic_pair,
    right_angle_family, ArcSet, RoundTrip,
};
use poristic::{Circle, GeneralizedCircle, GeomError, PairClassification, Triangle};

use crate::error::{CliError, Exit};
use crate::report::{ArcSetDto, Report};
use crate::scene::ValidScene;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub exit: Exit,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Self {
            report,
            exit: Exit::Ok,
        }
    }

    fn fail(mut report: Report, exit: Exit, message: String) -> Self {
        report.message = Some(message);
        Self { report, exit }
    }
}

/// Exit status for a library error: 2 when the pair (or triangle) is
/// outside the operation's domain, 3 when a seed is sterile or degenerate.
pub fn geom_exit(e: GeomError) -> Exit {
    match e {
        GeomError::InvalidPair
        | GeomError::RightTriangle
        | GeomError::NotAcute
        | GeomError::ExternalTangency
        | GeomError::NotRightPair
        | GeomError::PedalPointOnCircle => Exit::Incompatible,
        GeomError::NoTriangle | GeomError::DegenerateSeed => Exit::Sterile,
        _ => Exit::Malformed,
    }
}

fn relative(x: f64, scale: f64) -> f64 {
    x / scale.max(1.0)
}

fn incompatible(report: Report, verdict: PairClassification) -> Outcome {
    Outcome::fail(
        report,
        Exit::Incompatible,
        format!("pair is not realizable: {verdict:?}"),
    )
}

fn add_round_trip(report: &mut Report, t: &Triangle, s: &ValidScene) {
    let rt = RoundTrip::of(t, &s.circumcircle, &s.euler_circle);
    let scale = s.circumcircle.scale();
    report.residual_max("circumcenter", relative(rt.circumcenter, scale));
    report.residual_max("circumradius", relative(rt.circumradius, scale));
    report.residual_max("nine_point_center", relative(rt.nine_point_center, scale));
    report.residual_max("nine_point_radius", relative(rt.nine_point_radius, scale));
}

fn init_round_trip(report: &mut Report) {
    for name in [
        "circumcenter",
        "circumradius",
        "nine_point_center",
        "nine_point_radius",
    ] {
        report.residual(name, 0.0);
    }
}

fn describe_arcs(arcs: &ArcSet) -> String {
    arcs.arcs
        .iter()
        .map(|a| format!("[{:.9}, {:.9})", a.start, a.end))
        .collect::<Vec<_>>()
        .join(" ∪ ")
}

/// Verdict plus the residuals of the circumcircle/incircle (excircle)
/// relation for `(E', C)`.
///
/// Residuals: `radius_mismatch` (`|r - R/2| / R`), `center_distance`
/// (`ON / R`), and for compatible pairs `chapple`. In the right case `E'` is
/// a line and `chapple` measures its tangency to `C`.
pub fn check(s: &ValidScene) -> Outcome {
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("check", verdict);
    report.residual(
        "radius_mismatch",
        (e.radius() - 0.5 * c.radius()).abs() / c.radius(),
    );
    report.residual("center_distance", c.center().dist(e.center()) / c.radius());
    match verdict {
        PairClassification::Incompatible(_) => return incompatible(report, verdict),
        PairClassification::Right => {
            let prime = euler_prime(c, e).expect("right pair has a tangent line");
            let line = prime.as_line().expect("right pair maps to a line");
            report.residual(
                "chapple",
                (line.distance(c.center()) - c.radius()).abs() / c.radius(),
            );
        }
        PairClassification::Acute | PairClassification::Obtuse => {
            let pair = make_poristic_pair(c, e).expect("compatible pair");
            report.residual("chapple", pair.chapple_residual());
        }
    }
    Outcome::ok(report)
}

/// One triangle per seed angle (from `seed_angle`, else the scene seeds).
pub fn construct(s: &ValidScene, seed_angle: Option<f64>) -> Result<Outcome, CliError> {
    let seeds = match seed_angle {
        Some(theta) if theta.is_finite() => vec![theta],
        Some(theta) => return Err(CliError::Usage(format!("seed angle {theta} is not finite"))),
        None => s.seed_angles(),
    };
    if seeds.is_empty() {
        return Err(CliError::Usage(
            "construct needs --seed-angle or seeds in the scene".into(),
        ));
    }
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("construct", verdict);
    init_round_trip(&mut report);
    if !verdict.is_compatible() {
        return Ok(incompatible(report, verdict));
    }
    let arcs = fertile_arcs(c, e).ok();
    report.arcs = arcs.as_ref().map(ArcSetDto::from);
    let mut sterile = Vec::new();
    for theta in seeds {
        let built = if verdict == PairClassification::Right {
            right_angle_family(c, e, theta)
        } else {
            construct_triangle(c, e, c.point_at(theta))
        };
        match built {
            Ok(t) => {
                add_round_trip(&mut report, &t, s);
                report.push_triangle(&t);
            }
            Err(err) if geom_exit(err) == Exit::Sterile => sterile.push(theta),
            Err(err) => return Ok(Outcome::fail(report, geom_exit(err), err.to_string())),
        }
    }
    if sterile.is_empty() {
        return Ok(Outcome::ok(report));
    }
    let listed = sterile
        .iter()
        .map(|t| format!("{t:.9}"))
        .collect::<Vec<_>>()
        .join(", ");
    let message = match &arcs {
        Some(arcs) => format!(
            "sterile seed angle(s) {listed}; fertile arcs: {}",
            describe_arcs(arcs)
        ),
        None => format!(
            "degenerate seed angle(s) {listed}: the diameter passes through the contact point"
        ),
    };
    Ok(Outcome::fail(report, Exit::Sterile, message))
}

/// Seed angles for the right-angle family: `n` diameters spread over a
/// half-turn, skipping the one through the contact point.
fn right_seeds(c: &Circle, e: &Circle, n: usize) -> Vec<f64> {
    let base = c.angle_of(e.center());
    (0..n)
        .map(|k| base + (k as f64 + 0.5) * PI / n as f64)
        .collect()
}

/// `n` triangles in seed-angle order. Residuals: the round-trip maxima
/// plus `classification_mismatch`, the number of triangles whose angle
/// type disagrees with the verdict.
pub fn family(s: &ValidScene, n: usize) -> Outcome {
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("family", verdict);
    init_round_trip(&mut report);
    report.residual("classification_mismatch", 0.0);
    if !verdict.is_compatible() {
        return incompatible(report, verdict);
    }
    let built = if verdict == PairClassification::Right {
        right_seeds(c, e, n)
            .into_iter()
            .map(|theta| right_angle_family(c, e, theta))
            .collect()
    } else {
        report.arcs = fertile_arcs(c, e).ok().as_ref().map(ArcSetDto::from);
        family_sweep(c, e, n)
    };
    let triangles = match built {
        Ok(ts) => ts,
        Err(err) => return Outcome::fail(report, geom_exit(err), err.to_string()),
    };
    let mut mismatches = 0usize;
    for t in &triangles {
        add_round_trip(&mut report, t, s);
        if PairClassification::from(t.classify()) != verdict {
            mismatches += 1;
        }
        report.push_triangle(t);
    }
    report.residual("classification_mismatch", mismatches as f64);
    Outcome::ok(report)
}

/// Fertile arcs. Residual `boundary_tangency`: how far the tangents to `C`
/// at the arc ends are from touching `E'` (zero when there are no ends).
/// A right pair has every seed fertile except the contact point itself,
/// which is reported in the message.
pub fn arcs(s: &ValidScene) -> Outcome {
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("arcs", verdict);
    report.residual("boundary_tangency", 0.0);
    match verdict {
        PairClassification::Incompatible(_) => incompatible(report, verdict),
        PairClassification::Right => {
            report.arcs = Some((&ArcSet::full(*c)).into());
            report.message = Some(format!(
                "right pair: every seed is fertile except angle {:.9}",
                c.angle_of(e.center())
            ));
            Outcome::ok(report)
        }
        PairClassification::Acute | PairClassification::Obtuse => {
            let arcs = fertile_arcs(c, e).expect("compatible pair");
            let outer = *euler_prime(c, e)
                .expect("compatible pair")
                .as_circle()
                .expect("non-right pair maps to a circle");
            for b in arcs.boundaries() {
                let n = c.point_at(b) - c.center();
                let tangent_dist =
                    (n.dot(outer.center() - c.center()) / c.radius() - c.radius()).abs();
                report.residual_max(
                    "boundary_tangency",
                    relative((tangent_dist - outer.radius()).abs(), outer.scale()),
                );
            }
            report.arcs = Some((&arcs).into());
            Outcome::ok(report)
        }
    }
}

fn generalized_gap(a: &GeneralizedCircle, b: &GeneralizedCircle) -> f64 {
    match (a, b) {
        (GeneralizedCircle::Circle(x), GeneralizedCircle::Circle(y)) => x
            .center()
            .dist(y.center())
            .max((x.radius() - y.radius()).abs()),
        (GeneralizedCircle::Line(x), GeneralizedCircle::Line(y)) => {
            if x.approx_eq(y, 0.0) {
                0.0
            } else {
                (x.normal() - y.normal())
                    .norm()
                    .min((x.normal() + y.normal()).norm())
                    + (x.offset() - y.offset()).abs()
            }
        }
        _ => f64::INFINITY,
    }
}

/// The i-conic of the scene triangle (or of the first family member).
///
/// Residuals: `side_tangency`, `dual_vs_euler_prime`, and for acute
/// triangles `inellipse_center`, `inellipse_vertex`, `inellipse_axis_ratio`.
pub fn iconic(s: &ValidScene) -> Outcome {
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("iconic", verdict);
    report.residual("side_tangency", 0.0);
    report.residual("dual_vs_euler_prime", 0.0);
    if !verdict.is_compatible() {
        return incompatible(report, verdict);
    }
    let triangle = match s.triangle {
        Some(t) => Ok(t),
        None if verdict == PairClassification::Right => {
            right_angle_family(c, e, right_seeds(c, e, 1)[0])
        }
        None => family_sweep(c, e, 1).map(|ts| ts[0]),
    };
    let t = match triangle {
        Ok(t) => t,
        Err(err) => return Outcome::fail(report, geom_exit(err), err.to_string()),
    };
    report.push_triangle(&t);
    let conic = match iconic_of_triangle(&t) {
        Ok(k) => k,
        Err(err) => {
            return Outcome::fail(
                report,
                geom_exit(err),
                format!("{err}: the i-conic of a right triangle degenerates"),
            )
        }
    };
    report.conic = Some((&conic).into());
    let scale = conic.scale();
    let tangency = t
        .side_lines()
        .iter()
        .map(|l| is_tangent_line(l, &conic))
        .fold(0.0, f64::max);
    report.residual("side_tangency", relative(tangency, scale));
    let dual = dual_of_iconic(&conic, c).expect("focus is the circumcenter");
    let expected =
        euler_prime(&t.circumcircle(), &t.nine_point_circle()).expect("non-right triangle");
    let gap = generalized_gap(&dual, &expected);
    let gap_scale = expected.as_circle().map_or(1.0, Circle::scale);
    report.residual("dual_vs_euler_prime", relative(gap, gap_scale));
    if let Ok(inellipse) = inellipse_geometry_check(&t) {
        report.residual("inellipse_center", relative(inellipse.center_offset, scale));
        let vertex = inellipse.vertex_residuals[0].max(inellipse.vertex_residuals[1]);
        report.residual("inellipse_vertex", relative(vertex, scale));
        report.residual("inellipse_axis_ratio", (inellipse.axis_ratio - 1.0).abs());
    }
    Outcome::ok(report)
}

/// The report `render` draws when none is supplied: the scene triangle (or
/// `n` family members), the fertile arcs and the i-conic of the first
/// triangle, whatever of that exists for the pair.
pub fn render_defaults(s: &ValidScene, n: usize) -> Report {
    let (c, e) = (&s.circumcircle, &s.euler_circle);
    let verdict = check_pair(c, e);
    let mut report = Report::new("render", verdict);
    if !verdict.is_compatible() {
        if let Some(t) = &s.triangle {
            report.push_triangle(t);
        }
        return report;
    }
    let triangles = match (&s.triangle, verdict) {
        (Some(t), _) => vec![*t],
        (None, PairClassification::Right) => right_seeds(c, e, n)
            .into_iter()
            .filter_map(|theta| right_angle_family(c, e, theta).ok())
            .collect(),
        (None, _) => family_sweep(c, e, n).unwrap_or_default(),
    };
    for t in &triangles {
        report.push_triangle(t);
    }
    report.arcs = fertile_arcs(c, e).ok().as_ref().map(ArcSetDto::from);
    report.conic = triangles
        .first()
        .and_then(|t| iconic_of_triangle(t).ok())
        .as_ref()
        .map(Into::into);
    report
}
