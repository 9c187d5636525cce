//! Inversive and projective primitives for circles and lines in the plane.
//!
//! Every incidence predicate ("on the circle", "tangent", "through the
//! center") uses the same relative tolerance, see [`tol`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{GeomError, Result};

/// Base relative tolerance shared by all predicates.
pub const EPS: f64 = 1e-9;

/// Absolute tolerance for quantities of magnitude `scale`.
pub fn tol(scale: f64) -> f64 {
    EPS * scale.abs().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Point at `angle` radians on the unit circle.
    pub fn polar(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c, s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn midpoint(self, other: Point) -> Point {
        (self + other) * 0.5
    }

    /// Unit vector in the same direction, `None` for the zero vector.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self / n)
    }

    /// Polar angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        normalize_angle(self.y.atan2(self.x))
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
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, k: f64) -> Point {
        Point::new(self.x / k, self.y / k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Maps any angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(std::f64::consts::TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if t >= std::f64::consts::TAU {
        0.0
    } else {
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: Point,
    radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if radius <= 0.0 {
            return Err(GeomError::NonPositiveRadius);
        }
        Ok(Self { center, radius })
    }

    pub fn unit() -> Self {
        Self {
            center: Point::ORIGIN,
            radius: 1.0,
        }
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Magnitude used to scale tolerances for predicates on this circle.
    pub fn scale(&self) -> f64 {
        self.radius.max(self.center.norm())
    }

    pub fn point_at(&self, angle: f64) -> Point {
        self.center + Point::polar(angle) * self.radius
    }

    /// Angle in `[0, 2π)` of `p` seen from the center.
    pub fn angle_of(&self, p: Point) -> f64 {
        (p - self.center).angle()
    }

    /// Unsigned distance from `p` to the circle itself.
    pub fn residual(&self, p: Point) -> f64 {
        (p.dist(self.center) - self.radius).abs()
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.residual(p) <= tol(self.scale())
    }

    pub fn approx_eq(&self, other: &Circle, tolerance: f64) -> bool {
        self.center.dist(other.center) <= tolerance
            && (self.radius - other.radius).abs() <= tolerance
    }
}

/// Line `{p : normal · p = offset}` in canonical form: unit normal,
/// non-negative offset, and for offset zero the first nonzero normal
/// coordinate is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    normal: Point,
    offset: f64,
}

impl Line {
    pub fn new(normal: Point, offset: f64) -> Result<Self> {
        if !normal.is_finite() || !offset.is_finite() {
            return Err(GeomError::NonFinite);
        }
        let len = normal.norm();
        if len == 0.0 {
            return Err(GeomError::DegenerateNormal);
        }
        let (mut n, mut o) = (normal / len, offset / len);
        let flip = if o == 0.0 {
            n.x < 0.0 || (n.x == 0.0 && n.y < 0.0)
        } else {
            o < 0.0
        };
        if flip {
            n = -n;
            o = -o;
        }
        Ok(Self {
            normal: n,
            offset: o + 0.0,
        })
    }

    /// Line through `p` perpendicular to `normal`.
    pub fn with_normal_through(normal: Point, p: Point) -> Result<Self> {
        Self::new(normal, normal.dot(p))
    }

    pub fn through(p: Point, q: Point) -> Result<Self> {
        Self::with_normal_through((q - p).perp(), p)
    }

    pub fn normal(&self) -> Point {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn direction(&self) -> Point {
        self.normal.perp()
    }

    pub fn signed_distance(&self, p: Point) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn foot(&self, p: Point) -> Point {
        p - self.normal * self.signed_distance(p)
    }

    pub fn intersect(&self, other: &Line) -> Option<Point> {
        let det = self.normal.cross(other.normal);
        if det.abs() <= EPS {
            return None;
        }
        let x = (self.offset * other.normal.y - other.offset * self.normal.y) / det;
        let y = (self.normal.x * other.offset - other.normal.x * self.offset) / det;
        Some(Point::new(x, y))
    }

    /// Equality up to `tolerance`, robust to the sign ambiguity of lines
    /// passing (nearly) through the origin.
    pub fn approx_eq(&self, other: &Line, tolerance: f64) -> bool {
        let same = |n: Point, o: f64| {
            (self.normal - n).norm() <= tolerance && (self.offset - o).abs() <= tolerance
        };
        same(other.normal, other.offset) || same(-other.normal, -other.offset)
    }
}

/// The closure of circles under inversion: a proper circle or a line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedCircle {
    Circle(Circle),
    Line(Line),
}

impl GeneralizedCircle {
    pub fn as_circle(&self) -> Option<&Circle> {
        match self {
            GeneralizedCircle::Circle(c) => Some(c),
            GeneralizedCircle::Line(_) => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line> {
        match self {
            GeneralizedCircle::Line(l) => Some(l),
            GeneralizedCircle::Circle(_) => None,
        }
    }

    /// Unsigned distance from `p` to the curve.
    pub fn residual(&self, p: Point) -> f64 {
        match self {
            GeneralizedCircle::Circle(c) => c.residual(p),
            GeneralizedCircle::Line(l) => l.distance(p),
        }
    }

    pub fn approx_eq(&self, other: &GeneralizedCircle, tolerance: f64) -> bool {
        match (self, other) {
            (GeneralizedCircle::Circle(a), GeneralizedCircle::Circle(b)) => {
                a.approx_eq(b, tolerance)
            }
            (GeneralizedCircle::Line(a), GeneralizedCircle::Line(b)) => a.approx_eq(b, tolerance),
            _ => false,
        }
    }
}

impl From<Circle> for GeneralizedCircle {
    fn from(c: Circle) -> Self {
        GeneralizedCircle::Circle(c)
    }
}

impl From<Line> for GeneralizedCircle {
    fn from(l: Line) -> Self {
        GeneralizedCircle::Line(l)
    }
}

/// Image of `p` under inversion in `inv`.
pub fn invert_point(p: Point, inv: &Circle) -> Result<Point> {
    if !p.is_finite() {
        return Err(GeomError::NonFinite);
    }
    let d = p - inv.center;
    let d2 = d.norm_sq();
    if d2.sqrt() <= tol(inv.scale()) {
        return Err(GeomError::CenterInversion);
    }
    Ok(inv.center + d * (inv.radius * inv.radius / d2))
}

/// Image of a circle or line under inversion in `inv`.
///
/// Circles through the inversion center become lines and vice versa;
/// lines through the center are fixed.
pub fn invert_generalized_circle(g: &GeneralizedCircle, inv: &Circle) -> Result<GeneralizedCircle> {
    let r2 = inv.radius * inv.radius;
    let t = tol(inv.scale());
    match g {
        GeneralizedCircle::Circle(c) => {
            let v = c.center - inv.center;
            let dist = v.norm();
            if (dist - c.radius).abs() <= t {
                // The diametrically opposite point of the center maps to the
                // foot of the image line.
                let u = v.normalized().ok_or(GeomError::CenterInversion)?;
                let foot = inv.center + u * (r2 / (2.0 * c.radius));
                return Ok(Line::with_normal_through(u, foot)?.into());
            }
            // Signed power ratio; negative when the center is inside `c`.
            let k = r2 / (dist * dist - c.radius * c.radius);
            Ok(Circle::new(inv.center + v * k, k.abs() * c.radius)?.into())
        }
        GeneralizedCircle::Line(l) => {
            let h = l.distance(inv.center);
            if h <= t {
                return Ok((*l).into());
            }
            let far = invert_point(l.foot(inv.center), inv)?;
            Ok(Circle::new(inv.center.midpoint(far), 0.5 * far.dist(inv.center))?.into())
        }
    }
}

/// Polar of `p` with respect to `inv`.
pub fn polar_line(p: Point, inv: &Circle) -> Result<Line> {
    let image = invert_point(p, inv)?;
    Line::with_normal_through(p - inv.center, image)
}

/// Pole of `l` with respect to `inv`; inverse of [`polar_line`].
pub fn pole_of_line(l: &Line, inv: &Circle) -> Result<Point> {
    if l.distance(inv.center) <= tol(inv.scale()) {
        return Err(GeomError::LineThroughCenter);
    }
    invert_point(l.foot(inv.center), inv)
}

/// Tangent to `c` at the incident point `p`.
pub fn tangent_at(p: Point, c: &Circle) -> Result<Line> {
    if !p.is_finite() {
        return Err(GeomError::NonFinite);
    }
    if !c.contains_point(p) {
        return Err(GeomError::NotOnCircle);
    }
    let u = (p - c.center).normalized().ok_or(GeomError::NotOnCircle)?;
    Line::with_normal_through(u, c.center + u * c.radius)
}

/// A tangent line together with its point of tangency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent {
    pub line: Line,
    pub point: Point,
}

/// Tangents from `p` to `c`: two when `p` is outside, one when it is on the
/// circle, none when it is inside.
pub fn tangents_from_point(p: Point, c: &Circle) -> Vec<Tangent> {
    let v = p - c.center;
    let d = v.norm();
    let t = tol(c.scale());
    if !d.is_finite() || d < c.radius - t {
        return Vec::new();
    }
    if d <= c.radius + t {
        return tangent_at(p, c)
            .map(|line| {
                let point = c.center + v * (c.radius / d);
                vec![Tangent { line, point }]
            })
            .unwrap_or_default();
    }
    let u = v / d;
    let along = c.radius * c.radius / d;
    let half_chord = c.radius * ((d - c.radius) * (d + c.radius)).sqrt() / d;
    let base = c.center + u * along;
    [1.0, -1.0]
        .into_iter()
        .filter_map(|sign| {
            let point = base + u.perp() * (sign * half_chord);
            let normal = (point - c.center) / c.radius;
            Line::with_normal_through(normal, point)
                .ok()
                .map(|line| Tangent { line, point })
        })
        .collect()
}

/// Intersection points of a line and a circle (0, 1 or 2).
pub fn line_circle_intersection(l: &Line, c: &Circle) -> Vec<Point> {
    let s = l.signed_distance(c.center);
    let t = tol(c.scale());
    let foot = c.center - l.normal * s;
    if s.abs() > c.radius + t {
        Vec::new()
    } else if (s.abs() - c.radius).abs() <= t {
        vec![foot]
    } else {
        let h = ((c.radius - s) * (c.radius + s)).sqrt();
        let dir = l.direction();
        vec![foot + dir * h, foot - dir * h]
    }
}

/// Intersection points of two circles (0, 1 or 2).
pub fn circle_circle_intersection(a: &Circle, b: &Circle) -> Result<Vec<Point>> {
    let t = tol(a.scale().max(b.scale()));
    let v = b.center - a.center;
    let d = v.norm();
    if d <= t && (a.radius - b.radius).abs() <= t {
        return Err(GeomError::IdenticalCircles);
    }
    let sum = a.radius + b.radius;
    let diff = (a.radius - b.radius).abs();
    if d <= t || d > sum + t || d < diff - t {
        return Ok(Vec::new());
    }
    let u = v / d;
    // Distance from a.center to the radical line.
    let x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    if (d - sum).abs() <= t || (d - diff).abs() <= t {
        return Ok(vec![a.center + u * x.signum() * a.radius]);
    }
    let h = (a.radius * a.radius - x * x).max(0.0).sqrt();
    let base = a.center + u * x;
    Ok(vec![base + u.perp() * h, base - u.perp() * h])
}

#[cfg(test)]
mod tests {
    use super::*;

    const TIGHT: f64 = 1e-12;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn close(a: Point, b: Point) -> bool {
        a.dist(b) <= TIGHT
    }

    fn circle(cx: f64, cy: f64, r: f64) -> Circle {
        Circle::new(p(cx, cy), r).unwrap()
    }

    #[test]
    fn invert_point_examples() {
        let u = Circle::unit();
        assert!(close(invert_point(p(2.0, 0.0), &u).unwrap(), p(0.5, 0.0)));
        assert!(close(
            invert_point(p(0.75, 0.0), &u).unwrap(),
            p(4.0 / 3.0, 0.0)
        ));
        // d0 = 0.5 gives A' = 2/(d0 - 1) = -4
        assert!(close(
            invert_point(p(-0.25, 0.0), &u).unwrap(),
            p(-4.0, 0.0)
        ));
        assert_eq!(
            invert_point(p(0.0, 0.0), &u),
            Err(GeomError::CenterInversion)
        );
        assert_eq!(
            invert_point(p(1e-12, 0.0), &u),
            Err(GeomError::CenterInversion)
        );
        assert_eq!(
            invert_point(p(f64::NAN, 0.0), &u),
            Err(GeomError::NonFinite)
        );
    }

    #[test]
    fn invert_circle_examples() {
        let u = Circle::unit();
        let img = invert_generalized_circle(&circle(0.25, 0.0, 0.5).into(), &u).unwrap();
        let c = img.as_circle().unwrap();
        assert!(close(c.center(), p(-4.0 / 3.0, 0.0)));
        assert!((c.radius() - 8.0 / 3.0).abs() < TIGHT);

        let img = invert_generalized_circle(&circle(0.5, 0.0, 0.5).into(), &u).unwrap();
        let l = img.as_line().unwrap();
        assert!(close(l.normal(), p(1.0, 0.0)));
        assert!((l.offset() - 1.0).abs() < TIGHT);

        let img = invert_generalized_circle(&circle(0.75, 0.0, 0.5).into(), &u).unwrap();
        let c = img.as_circle().unwrap();
        assert!(close(c.center(), p(2.4, 0.0)));
        assert!((c.radius() - 1.6).abs() < TIGHT);
    }

    #[test]
    fn invert_circle_matches_diameter_oracle() {
        // Image circle has diameter [inv(A), inv(B)] for the diameter [A, B]
        // collinear with the inversion center.
        let inv = circle(0.3, -0.2, 1.7);
        for (cx, cy, r) in [
            (1.0, 2.0, 0.5),
            (0.1, 0.0, 0.9),
            (-3.0, 1.0, 2.5),
            (0.5, -0.4, 0.2),
        ] {
            let g = circle(cx, cy, r);
            let u = (g.center() - inv.center()).normalized().unwrap();
            let a = invert_point(g.center() - u * r, &inv).unwrap();
            let b = invert_point(g.center() + u * r, &inv).unwrap();
            let img = invert_generalized_circle(&g.into(), &inv).unwrap();
            let c = img.as_circle().unwrap();
            assert!(c.center().dist(a.midpoint(b)) < 1e-10);
            assert!((c.radius() - 0.5 * a.dist(b)).abs() < 1e-10);
        }
    }

    #[test]
    fn concentric_circle_inverts_to_concentric() {
        let img =
            invert_generalized_circle(&circle(0.0, 0.0, 0.5).into(), &Circle::unit()).unwrap();
        let c = img.as_circle().unwrap();
        assert!(close(c.center(), Point::ORIGIN));
        assert!((c.radius() - 2.0).abs() < TIGHT);
    }

    #[test]
    fn lines_under_inversion() {
        let u = Circle::unit();
        let through = Line::new(p(1.0, 1.0), 0.0).unwrap();
        assert_eq!(
            invert_generalized_circle(&through.into(), &u).unwrap(),
            GeneralizedCircle::Line(through)
        );
        let x1 = Line::new(p(1.0, 0.0), 1.0).unwrap();
        let img = invert_generalized_circle(&x1.into(), &u).unwrap();
        let c = img.as_circle().unwrap();
        assert!(close(c.center(), p(0.5, 0.0)));
        assert!((c.radius() - 0.5).abs() < TIGHT);
    }

    #[test]
    fn line_canonical_form() {
        let l = Line::new(p(-2.0, 0.0), -1.0).unwrap();
        assert_eq!(l.normal(), p(1.0, 0.0));
        assert_eq!(l.offset(), 0.5);
        let l = Line::new(p(0.0, -3.0), 0.0).unwrap();
        assert_eq!(l.normal(), p(0.0, 1.0));
        assert_eq!(l.offset(), 0.0);
        let l = Line::new(p(-1.0, 5.0), 0.0).unwrap();
        assert!(l.normal().x > 0.0);
        assert_eq!(
            Line::new(p(0.0, 0.0), 1.0),
            Err(GeomError::DegenerateNormal)
        );
        assert_eq!(
            Line::through(p(0.0, 0.0), p(0.0, 0.0)),
            Err(GeomError::DegenerateNormal)
        );
    }

    #[test]
    fn polar_examples() {
        let u = Circle::unit();
        let l = polar_line(p(2.0, 0.0), &u).unwrap();
        assert!(l.approx_eq(&Line::new(p(1.0, 0.0), 0.5).unwrap(), TIGHT));
        let l = polar_line(p(1.0, 0.0), &u).unwrap();
        assert!(l.approx_eq(&Line::new(p(1.0, 0.0), 1.0).unwrap(), TIGHT));
        let l = polar_line(p(0.5, 0.0), &u).unwrap();
        assert!(l.approx_eq(&Line::new(p(1.0, 0.0), 2.0).unwrap(), TIGHT));
        assert_eq!(
            polar_line(Point::ORIGIN, &u),
            Err(GeomError::CenterInversion)
        );
    }

    #[test]
    fn pole_examples() {
        let u = Circle::unit();
        let x = |o| Line::new(p(1.0, 0.0), o).unwrap();
        assert!(close(pole_of_line(&x(0.5), &u).unwrap(), p(2.0, 0.0)));
        assert!(close(pole_of_line(&x(1.0), &u).unwrap(), p(1.0, 0.0)));
        let diag = Line::new(p(1.0, 1.0), 2.0).unwrap();
        assert!(close(pole_of_line(&diag, &u).unwrap(), p(0.5, 0.5)));
        assert_eq!(pole_of_line(&x(0.0), &u), Err(GeomError::LineThroughCenter));
    }

    #[test]
    fn tangent_at_examples() {
        let u = Circle::unit();
        let t = tangent_at(p(1.0, 0.0), &u).unwrap();
        assert!(t.approx_eq(&Line::new(p(1.0, 0.0), 1.0).unwrap(), TIGHT));
        let t = tangent_at(p(0.0, 1.0), &u).unwrap();
        assert!(t.approx_eq(&Line::new(p(0.0, 1.0), 1.0).unwrap(), TIGHT));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let t = tangent_at(p(h, h), &u).unwrap();
        assert!(close(t.normal(), p(h, h)));
        assert!((t.offset() - 1.0).abs() < TIGHT);
        assert_eq!(tangent_at(p(0.5, 0.0), &u), Err(GeomError::NotOnCircle));
    }

    #[test]
    fn tangents_from_point_examples() {
        let u = Circle::unit();
        let ts = tangents_from_point(p(2.0, 0.0), &u);
        assert_eq!(ts.len(), 2);
        let s = 3f64.sqrt() / 2.0;
        assert!(ts.iter().any(|t| close(t.point, p(0.5, s))));
        assert!(ts.iter().any(|t| close(t.point, p(0.5, -s))));
        for t in &ts {
            assert!(t.line.approx_eq(&tangent_at(t.point, &u).unwrap(), TIGHT));
            assert!(t.line.distance(p(2.0, 0.0)) < TIGHT);
        }
        let ts = tangents_from_point(p(1.0, 0.0), &u);
        assert_eq!(ts.len(), 1);
        assert!(ts[0]
            .line
            .approx_eq(&Line::new(p(1.0, 0.0), 1.0).unwrap(), TIGHT));
        assert!(tangents_from_point(p(0.5, 0.0), &u).is_empty());
    }

    #[test]
    fn line_circle_examples() {
        let u = Circle::unit();
        let x = |o| Line::new(p(1.0, 0.0), o).unwrap();
        let pts = line_circle_intersection(&x(0.0), &u);
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().any(|q| close(*q, p(0.0, 1.0))));
        assert!(pts.iter().any(|q| close(*q, p(0.0, -1.0))));
        assert_eq!(line_circle_intersection(&x(1.0), &u), vec![p(1.0, 0.0)]);
        assert!(line_circle_intersection(&x(2.0), &u).is_empty());
    }

    #[test]
    fn circle_circle_examples() {
        let u = Circle::unit();
        let s = 3f64.sqrt() / 2.0;
        let pts = circle_circle_intersection(&u, &circle(1.0, 0.0, 1.0)).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().any(|q| close(*q, p(0.5, s))));
        assert!(pts.iter().any(|q| close(*q, p(0.5, -s))));

        let other = circle(0.75, 0.0, 0.5);
        let pts = circle_circle_intersection(&u, &other).unwrap();
        let y = (1.0f64 - 0.875 * 0.875).sqrt();
        assert!(pts.iter().any(|q| close(*q, p(0.875, y))));
        assert!(pts.iter().any(|q| close(*q, p(0.875, -y))));
        for q in &pts {
            assert!(u.residual(*q) < TIGHT && other.residual(*q) < TIGHT);
        }

        assert!(circle_circle_intersection(&u, &circle(3.0, 0.0, 1.0))
            .unwrap()
            .is_empty());
        assert_eq!(
            circle_circle_intersection(&u, &u),
            Err(GeomError::IdenticalCircles)
        );
        // internal tangency at (1, 0)
        let pts = circle_circle_intersection(&u, &circle(0.5, 0.0, 0.5)).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(close(pts[0], p(1.0, 0.0)));
        // external tangency at (1, 0)
        let pts = circle_circle_intersection(&u, &circle(1.5, 0.0, 0.5)).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(close(pts[0], p(1.0, 0.0)));
    }

    #[test]
    fn circle_rejects_bad_radius() {
        assert_eq!(
            Circle::new(Point::ORIGIN, 0.0),
            Err(GeomError::NonPositiveRadius)
        );
        assert_eq!(
            Circle::new(Point::ORIGIN, -1.0),
            Err(GeomError::NonPositiveRadius)
        );
        assert_eq!(
            Circle::new(p(f64::INFINITY, 0.0), 1.0),
            Err(GeomError::NonFinite)
        );
    }

    #[test]
    fn normalize_angle_range() {
        use std::f64::consts::{PI, TAU};
        assert_eq!(normalize_angle(0.0), 0.0);
        assert!((normalize_angle(-PI / 2.0) - 1.5 * PI).abs() < TIGHT);
        assert!((normalize_angle(5.0 * PI) - PI).abs() < 1e-12);
        assert!(normalize_angle(-1e-18) < TAU);
    }
}
