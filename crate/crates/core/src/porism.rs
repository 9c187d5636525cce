//! Circumcircle / Euler circle pairs and the triangles they admit.
//!
//! A pair `(C, E)` is realized by triangles exactly when `E` has radius
//! `R/2` and its center lies within `3R/2` of `O`. Inverting `E` in `C`
//! gives a circle `E'` such that `(E', C)` is a circumcircle/incircle pair
//! (acute case) or circumcircle/excircle pair (obtuse case); every
//! triangle with circumcircle `C` and Euler circle `E` is the contact
//! triangle of a triangle inscribed in `E'` and circumscribed about `C`.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::kernel::{
    invert_generalized_circle, line_circle_intersection, normalize_angle, tangent_at,
    tangents_from_point, tol, Circle, GeneralizedCircle, Line, Point,
};
use crate::triangle::{AngleKind, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IncompatibleReason {
    /// The Euler circle radius is not half the circumradius.
    RadiusMismatch,
    /// The centers are at least `3R/2` apart.
    TooFarApart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClassification {
    Acute,
    Right,
    Obtuse,
    Incompatible(IncompatibleReason),
}

impl PairClassification {
    pub fn is_compatible(self) -> bool {
        !matches!(self, PairClassification::Incompatible(_))
    }
}

impl From<AngleKind> for PairClassification {
    fn from(kind: AngleKind) -> Self {
        match kind {
            AngleKind::Acute => PairClassification::Acute,
            AngleKind::Right => PairClassification::Right,
            AngleKind::Obtuse => PairClassification::Obtuse,
        }
    }
}

/// Role played by the circumcircle `C` with respect to the triangles
/// inscribed in `E'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoristicKind {
    Incircle,
    Excircle,
}

/// `(E', C)` viewed as a circumcircle/incircle or circumcircle/excircle pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoristicPair {
    pub outer: Circle,
    pub inner: Circle,
    pub kind: PoristicKind,
    pub classification: PairClassification,
}

impl PoristicPair {
    pub fn outer_radius(&self) -> f64 {
        self.outer.radius()
    }

    pub fn inner_radius(&self) -> f64 {
        self.inner.radius()
    }

    pub fn center_distance(&self) -> f64 {
        self.outer.center().dist(self.inner.center())
    }

    /// Relative residual of `(R1 - r1)^2 = d1^2 + r1^2` (incircle) or
    /// `(R1 + r1)^2 = d1^2 + r1^2` (excircle).
    pub fn chapple_residual(&self) -> f64 {
        chapple_residual(
            self.kind,
            self.outer_radius(),
            self.inner_radius(),
            self.center_distance(),
        )
    }
}

pub fn chapple_residual(kind: PoristicKind, outer_r: f64, inner_r: f64, dist: f64) -> f64 {
    let lhs = match kind {
        PoristicKind::Incircle => (outer_r - inner_r).powi(2),
        PoristicKind::Excircle => (outer_r + inner_r).powi(2),
    };
    let rhs = dist * dist + inner_r * inner_r;
    (lhs - rhs).abs() / lhs.max(rhs)
}

/// Half-open angular interval `[start, end)` measured at the circle center,
/// with `0 <= start < end <= 2π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn len(&self) -> f64 {
        self.end - self.start
    }

    pub fn contains(&self, theta: f64) -> bool {
        (self.start..self.end).contains(&theta)
    }
}

/// Disjoint arcs of a circle, sorted by start angle.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSet {
    pub circle: Circle,
    pub arcs: Vec<Arc>,
}

impl ArcSet {
    pub fn full(circle: Circle) -> Self {
        Self {
            circle,
            arcs: vec![Arc {
                start: 0.0,
                end: TAU,
            }],
        }
    }

    /// The open arc of half-width `half_width` centered on `mid`, split at
    /// angle zero when it wraps.
    pub fn centered(circle: Circle, mid: f64, half_width: f64) -> Self {
        if half_width >= std::f64::consts::PI {
            return Self::full(circle);
        }
        let start = normalize_angle(mid - half_width);
        let end = start + 2.0 * half_width;
        let arcs = if end > TAU {
            vec![
                Arc {
                    start: 0.0,
                    end: end - TAU,
                },
                Arc { start, end: TAU },
            ]
        } else {
            vec![Arc { start, end }]
        };
        Self { circle, arcs }
    }

    pub fn contains(&self, theta: f64) -> bool {
        let t = normalize_angle(theta);
        self.arcs.iter().any(|a| a.contains(t))
    }

    pub fn total_len(&self) -> f64 {
        self.arcs.iter().map(Arc::len).sum()
    }

    pub fn is_full(&self) -> bool {
        (self.total_len() - TAU).abs() <= 1e-15
    }

    /// `n` angles spread uniformly over the set, at the midpoints of `n`
    /// equal slices of its total measure, in increasing order. A set that
    /// wraps through angle zero is sliced as one contiguous arc, so no
    /// sample lands on the artificial cut.
    pub fn sample(&self, n: usize) -> Vec<f64> {
        let runs = self.runs();
        let step = self.total_len() / n as f64;
        let mut out: Vec<f64> = (0..n)
            .map(|k| {
                let mut s = (k as f64 + 0.5) * step;
                for &(start, len) in &runs {
                    if s < len {
                        return normalize_angle(start + s);
                    }
                    s -= len;
                }
                // rounding spill past the last run
                runs.last()
                    .map_or(0.0, |&(start, len)| normalize_angle(start + len))
            })
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    /// `(start, length)` of each maximal arc, rejoining the pieces split
    /// at zero.
    fn runs(&self) -> Vec<(f64, f64)> {
        let mut runs: Vec<(f64, f64)> = self.arcs.iter().map(|a| (a.start, a.len())).collect();
        if runs.len() >= 2 && self.wraps() {
            let (_, head) = runs.remove(0);
            if let Some(last) = runs.last_mut() {
                last.1 += head;
            }
        }
        runs
    }

    fn wraps(&self) -> bool {
        !self.is_full()
            && self.arcs.first().is_some_and(|a| a.start == 0.0)
            && self.arcs.last().is_some_and(|a| a.end == TAU)
    }

    /// Arc boundaries in `[0, 2π)`, skipping the artificial cut at zero.
    pub fn boundaries(&self) -> Vec<f64> {
        if self.is_full() {
            return Vec::new();
        }
        let wraps = self.wraps();
        let mut out: Vec<f64> = self
            .arcs
            .iter()
            .flat_map(|a| [a.start, a.end])
            .filter(|t| !(wraps && (*t == 0.0 || *t == TAU)))
            .map(normalize_angle)
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

/// Decides whether `(c, e)` is the circumcircle/Euler circle pair of some
/// triangle and, if so, of which angle type.
pub fn check_pair(c: &Circle, e: &Circle) -> PairClassification {
    let r = c.radius();
    let t = tol(r);
    if (e.radius() - 0.5 * r).abs() > t {
        return PairClassification::Incompatible(IncompatibleReason::RadiusMismatch);
    }
    let on = c.center().dist(e.center());
    if on >= 1.5 * r - t {
        return PairClassification::Incompatible(IncompatibleReason::TooFarApart);
    }
    let gap = on - 0.5 * r;
    if gap.abs() <= t {
        PairClassification::Right
    } else if gap < 0.0 {
        PairClassification::Acute
    } else {
        PairClassification::Obtuse
    }
}

/// `E'`, the inverse of the Euler circle in the circumcircle. A line (the
/// tangent to `C` at the contact point) in the right-angle case.
pub fn euler_prime(c: &Circle, e: &Circle) -> Result<GeneralizedCircle> {
    match check_pair(c, e) {
        PairClassification::Incompatible(_) => Err(GeomError::InvalidPair),
        PairClassification::Right => {
            let u = (e.center() - c.center())
                .normalized()
                .ok_or(GeomError::InvalidPair)?;
            Ok(tangent_at(c.center() + u * c.radius(), c)?.into())
        }
        PairClassification::Acute | PairClassification::Obtuse => {
            let image = invert_generalized_circle(&(*e).into(), c)?;
            image
                .as_circle()
                .map(|circle| GeneralizedCircle::Circle(*circle))
                .ok_or(GeomError::InvalidPair)
        }
    }
}

fn euler_prime_circle(c: &Circle, e: &Circle) -> Result<(Circle, PairClassification)> {
    let class = check_pair(c, e);
    if !matches!(
        class,
        PairClassification::Acute | PairClassification::Obtuse
    ) {
        return Err(GeomError::InvalidPair);
    }
    let outer = *euler_prime(c, e)?
        .as_circle()
        .ok_or(GeomError::InvalidPair)?;
    Ok((outer, class))
}

pub fn make_poristic_pair(c: &Circle, e: &Circle) -> Result<PoristicPair> {
    let (outer, classification) = euler_prime_circle(c, e)?;
    let kind = match classification {
        PairClassification::Acute => PoristicKind::Incircle,
        _ => PoristicKind::Excircle,
    };
    Ok(PoristicPair {
        outer,
        inner: *c,
        kind,
        classification,
    })
}

/// Builds the triangle with a vertex at `seed`, circumcircle `c` and Euler
/// circle `e` by tangent chasing: the tangent to `c` at `seed` cuts `E'` in
/// two points, and the second tangents from those points touch `c` at the
/// remaining vertices.
///
/// Fails with [`GeomError::NoTriangle`] when the tangent at `seed` does not
/// cut `E'` in two distinct points.
pub fn construct_triangle(c: &Circle, e: &Circle, seed: Point) -> Result<Triangle> {
    if !c.contains_point(seed) {
        return Err(GeomError::SeedNotOnCircle);
    }
    let (outer, _) = euler_prime_circle(c, e)?;
    let side = tangent_at(seed, c)?;
    let cut = line_circle_intersection(&side, &outer);
    let [first, second] = cut.as_slice() else {
        return Err(GeomError::NoTriangle);
    };
    let b = other_contact(*first, seed, c)?;
    let cv = other_contact(*second, seed, c)?;
    Triangle::new(seed, b, cv).map_err(|_| GeomError::NoTriangle)
}

/// Contact point of the tangent from `from` to `c` that is not the tangent
/// at `seed`.
fn other_contact(from: Point, seed: Point, c: &Circle) -> Result<Point> {
    let radial = |q: Point| (q - c.center()) / c.radius();
    let seed_dir = radial(seed);
    tangents_from_point(from, c)
        .into_iter()
        .filter(|t| radial(t.point).dot(seed_dir) <= 1.0 - 1e-9)
        .min_by(|x, y| {
            radial(x.point)
                .dot(seed_dir)
                .total_cmp(&radial(y.point).dot(seed_dir))
        })
        .map(|t| t.point)
        .ok_or(GeomError::NoTriangle)
}

/// Seeds (as angles on `c`) from which [`construct_triangle`] succeeds.
///
/// In the obtuse case the tangent at angle `θ` is at distance
/// `|d1 cos(θ - φ) - R|` from the center of `E'` (radius `R1`, at distance
/// `d1` and direction `φ` from `O`). It cuts `E'` iff
/// `cos(θ - φ) > (R - R1) / d1`; the bounding angles are the contact points
/// on `c` of the common tangents of `c` and `E'`.
pub fn fertile_arcs(c: &Circle, e: &Circle) -> Result<ArcSet> {
    let (outer, class) = euler_prime_circle(c, e)?;
    if class == PairClassification::Acute {
        return Ok(ArcSet::full(*c));
    }
    let v = outer.center() - c.center();
    let d1 = v.norm();
    let cos_edge = ((c.radius() - outer.radius()) / d1).clamp(-1.0, 1.0);
    Ok(ArcSet::centered(*c, v.angle(), cos_edge.acos()))
}

/// `n` triangles built from seeds spread uniformly in angle over the
/// fertile arcs, in increasing seed-angle order.
pub fn family_sweep(c: &Circle, e: &Circle, n: usize) -> Result<Vec<Triangle>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let arcs = fertile_arcs(c, e)?;
    arcs.sample(n)
        .into_par_iter()
        .map(|theta| construct_triangle(c, e, c.point_at(theta)))
        .collect()
}

/// Right-angle case: `E` is internally tangent to `C` at `A` and passes
/// through `O`. Returns the triangle with vertex `A` whose hypotenuse is the
/// diameter of `C` through the point at `seed_angle`.
pub fn right_angle_family(c: &Circle, e: &Circle, seed_angle: f64) -> Result<Triangle> {
    let v = e.center() - c.center();
    let on = v.norm();
    if (on - (c.radius() + e.radius())).abs() <= tol(c.scale()) {
        return Err(GeomError::ExternalTangency);
    }
    if check_pair(c, e) != PairClassification::Right {
        return Err(GeomError::NotRightPair);
    }
    let u = v.normalized().ok_or(GeomError::NotRightPair)?;
    let apex = c.center() + u * c.radius();
    let dir = Point::polar(seed_angle);
    if !seed_angle.is_finite() {
        return Err(GeomError::NonFinite);
    }
    if dir.cross(u).abs() <= 1e-9 {
        return Err(GeomError::DegenerateSeed);
    }
    let end = c.center() + dir * c.radius();
    let other = c.center() - dir * c.radius();
    Triangle::new(apex, end, other).map_err(|_| GeomError::DegenerateSeed)
}

/// Distances between the circumcircle / Euler circle of `t` and the
/// expected `c` / `e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundTrip {
    pub circumcenter: f64,
    pub circumradius: f64,
    pub nine_point_center: f64,
    pub nine_point_radius: f64,
}

impl RoundTrip {
    pub fn of(t: &Triangle, c: &Circle, e: &Circle) -> Self {
        let cc = t.circumcircle();
        let nc = t.nine_point_circle();
        Self {
            circumcenter: cc.center().dist(c.center()),
            circumradius: (cc.radius() - c.radius()).abs(),
            nine_point_center: nc.center().dist(e.center()),
            nine_point_radius: (nc.radius() - e.radius()).abs(),
        }
    }

    pub fn max(&self) -> f64 {
        self.circumcenter
            .max(self.circumradius)
            .max(self.nine_point_center)
            .max(self.nine_point_radius)
    }
}

/// The side lines of the outer triangle (tangents to `c` at the vertices).
pub fn outer_sides(t: &Triangle, c: &Circle) -> Result<[Line; 3]> {
    let [a, b, cv] = t.vertices();
    Ok([tangent_at(a, c)?, tangent_at(b, c)?, tangent_at(cv, c)?])
}
