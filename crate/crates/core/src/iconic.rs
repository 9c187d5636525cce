//! The inscribed conic with a focus at the circumcenter (i-conic), obtained
//! as the negative pedal of the Euler circle with respect to `O`.

use crate::error::{GeomError, Result};
use crate::kernel::{invert_generalized_circle, tol, Circle, GeneralizedCircle, Line, Point};
use crate::triangle::{AngleKind, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Hyperbola,
}

/// Central conic in focal form. `focus = center + focal_dist * axis_dir`;
/// the second focus is the reflection of the first through the center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentralConic {
    center: Point,
    focus: Point,
    axis_dir: Point,
    semi_major: f64,
    focal_dist: f64,
    kind: ConicKind,
}

impl CentralConic {
    /// Builds the conic from its center, one focus and the semi-major
    /// (transverse) length. A focus at the center gives a circle, with the
    /// axis along +x.
    pub fn from_focus(center: Point, focus: Point, semi_major: f64) -> Result<Self> {
        if !center.is_finite() || !focus.is_finite() || !semi_major.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if semi_major <= 0.0 {
            return Err(GeomError::NonPositiveRadius);
        }
        let offset = focus - center;
        let focal_dist = offset.norm();
        if (focal_dist - semi_major).abs() <= tol(semi_major.max(center.norm())) {
            return Err(GeomError::PedalPointOnCircle);
        }
        let axis_dir = offset.normalized().unwrap_or(Point::new(1.0, 0.0));
        let kind = if focal_dist < semi_major {
            ConicKind::Ellipse
        } else {
            ConicKind::Hyperbola
        };
        Ok(Self {
            center,
            focus,
            axis_dir,
            semi_major,
            focal_dist,
            kind,
        })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn focus(&self) -> Point {
        self.focus
    }

    pub fn second_focus(&self) -> Point {
        self.center * 2.0 - self.focus
    }

    pub fn axis_dir(&self) -> Point {
        self.axis_dir
    }

    pub fn semi_major(&self) -> f64 {
        self.semi_major
    }

    pub fn focal_dist(&self) -> f64 {
        self.focal_dist
    }

    pub fn semi_minor(&self) -> f64 {
        let (a, c) = (self.semi_major, self.focal_dist);
        ((a - c) * (a + c)).abs().sqrt()
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    /// Endpoints of the major (transverse) axis.
    pub fn vertices(&self) -> [Point; 2] {
        let d = self.axis_dir * self.semi_major;
        [self.center + d, self.center - d]
    }

    /// Circle on the major axis as diameter: the pedal curve of the conic
    /// with respect to either focus.
    pub fn auxiliary_circle(&self) -> Circle {
        Circle::new(self.center, self.semi_major).expect("positive semi-major axis")
    }

    pub fn scale(&self) -> f64 {
        self.semi_major
            .max(self.center.norm())
            .max(self.focus.norm())
    }

    /// Point of the conic at parameter `t`: `(a cos t, b sin t)` for an
    /// ellipse, `(±a cosh t, b sinh t)` for a hyperbola, in axis coordinates.
    /// `branch` selects the sign for hyperbolas (true: the branch around the
    /// stored focus).
    pub fn point_at(&self, t: f64, branch: bool) -> Point {
        let (a, b) = (self.semi_major, self.semi_minor());
        let (u, v) = match self.kind {
            ConicKind::Ellipse => (a * t.cos(), b * t.sin()),
            ConicKind::Hyperbola => {
                let s = if branch { 1.0 } else { -1.0 };
                (s * a * t.cosh(), b * t.sinh())
            }
        };
        self.center + self.axis_dir * u + self.axis_dir.perp() * v
    }
}

/// Envelope of the lines through `M` perpendicular to `DM` as `M` runs
/// over `e`: a conic with focus `D`, center at the center of `e` and
/// semi-major axis equal to the radius of `e`.
pub fn negative_pedal_of_circle(e: &Circle, pedal: Point) -> Result<CentralConic> {
    if e.residual(pedal) <= tol(e.scale()) {
        return Err(GeomError::PedalPointOnCircle);
    }
    CentralConic::from_focus(e.center(), pedal, e.radius())
}

/// The conic inscribed in `t` with a focus at its circumcenter.
pub fn iconic_of_triangle(t: &Triangle) -> Result<CentralConic> {
    if t.classify() == AngleKind::Right {
        return Err(GeomError::RightTriangle);
    }
    negative_pedal_of_circle(&t.nine_point_circle(), t.circumcenter()).map_err(|e| match e {
        GeomError::PedalPointOnCircle => GeomError::RightTriangle,
        other => other,
    })
}

/// Distance between the foot of the perpendicular from the focus onto `l`
/// and the auxiliary circle. Zero exactly for tangent lines.
pub fn is_tangent_line(l: &Line, conic: &CentralConic) -> f64 {
    let foot = l.foot(conic.focus);
    (foot.dist(conic.center) - conic.semi_major).abs()
}

/// [`is_tangent_line`] residual compared against the tolerance for the
/// conic's scale.
pub fn touches(l: &Line, conic: &CentralConic) -> bool {
    is_tangent_line(l, conic) <= tol(conic.scale())
}

/// Polar dual of a conic with a focus at the center of `c`: the locus of
/// the poles of its tangents, which is the inverse of its auxiliary circle.
pub fn dual_of_iconic(conic: &CentralConic, c: &Circle) -> Result<GeneralizedCircle> {
    if conic.focus.dist(c.center()) > tol(c.scale()) {
        return Err(GeomError::FocusNotAtCenter);
    }
    invert_generalized_circle(&conic.auxiliary_circle().into(), c)
}

/// How closely the in-ellipse of an acute triangle sits on its Euler circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InellipseReport {
    /// `|conic center - N|`.
    pub center_offset: f64,
    /// Distance of each major-axis vertex from the Euler circle.
    pub vertex_residuals: [f64; 2],
    /// Major axis length over Euler circle diameter.
    pub axis_ratio: f64,
}

pub fn inellipse_geometry_check(t: &Triangle) -> Result<InellipseReport> {
    if t.classify() != AngleKind::Acute {
        return Err(GeomError::NotAcute);
    }
    let conic = iconic_of_triangle(t)?;
    let euler = t.nine_point_circle();
    let [v1, v2] = conic.vertices();
    Ok(InellipseReport {
        center_offset: conic.center.dist(euler.center()),
        vertex_residuals: [euler.residual(v1), euler.residual(v2)],
        axis_ratio: conic.semi_major / euler.radius(),
    })
}
