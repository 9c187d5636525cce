//! Triangle centers, the nine-point circle and the tangential triangle.

use crate::error::{GeomError, Result};
use crate::kernel::{invert_point, tangent_at, tol, Circle, Line, Point, EPS};

/// Three non-collinear points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    vertices: [Point; 3],
}

/// Angle type of a triangle, decided by the position of the nine-point
/// center relative to the circumcircle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleKind {
    Acute,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCenters {
    pub circumcenter: Point,
    pub circumradius: f64,
    pub orthocenter: Point,
    pub nine_point_center: Point,
    pub nine_point_radius: f64,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let longest_sq = a.dist(b).max(b.dist(c)).max(c.dist(a)).powi(2);
        let twice_area = (b - a).cross(c - a);
        if twice_area.abs() <= EPS * longest_sq || longest_sq == 0.0 {
            return Err(GeomError::CollinearVertices);
        }
        Ok(Self {
            vertices: [a, b, c],
        })
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn a(&self) -> Point {
        self.vertices[0]
    }

    pub fn b(&self) -> Point {
        self.vertices[1]
    }

    pub fn c(&self) -> Point {
        self.vertices[2]
    }

    /// Signed area; positive for counter-clockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        0.5 * (self.b() - self.a()).cross(self.c() - self.a())
    }

    /// Midpoints of the sides opposite `a`, `b`, `c`, in that order.
    pub fn side_midpoints(&self) -> [Point; 3] {
        let [a, b, c] = self.vertices;
        [b.midpoint(c), c.midpoint(a), a.midpoint(b)]
    }

    pub fn midpoint_triangle(&self) -> Triangle {
        let [ma, mb, mc] = self.side_midpoints();
        Triangle {
            vertices: [ma, mb, mc],
        }
    }

    pub fn circumcircle(&self) -> Circle {
        let [a, b, c] = self.vertices;
        let (ab, ac) = (b - a, c - a);
        let d = 2.0 * ab.cross(ac);
        let (ab2, ac2) = (ab.norm_sq(), ac.norm_sq());
        let offset = Point::new(ac.y * ab2 - ab.y * ac2, ab.x * ac2 - ac.x * ab2) / d;
        Circle::new(a + offset, offset.norm())
            .expect("non-collinear triangle has a finite circumcircle")
    }

    pub fn circumcenter(&self) -> Point {
        self.circumcircle().center()
    }

    /// `H = A + B + C - 2O`, i.e. `H - O` is the sum of the vertex vectors
    /// taken from the circumcenter.
    pub fn orthocenter(&self) -> Point {
        let o = self.circumcenter();
        let [a, b, c] = self.vertices;
        o + (a - o) + (b - o) + (c - o)
    }

    pub fn centers(&self) -> TriangleCenters {
        let cc = self.circumcircle();
        let o = cc.center();
        let [a, b, c] = self.vertices;
        let h = o + (a - o) + (b - o) + (c - o);
        TriangleCenters {
            circumcenter: o,
            circumradius: cc.radius(),
            orthocenter: h,
            nine_point_center: o.midpoint(h),
            nine_point_radius: 0.5 * cc.radius(),
        }
    }

    /// The Euler circle: center at the midpoint of `OH`, radius `R/2`.
    pub fn nine_point_circle(&self) -> Circle {
        let c = self.centers();
        Circle::new(c.nine_point_center, c.nine_point_radius).expect("positive circumradius")
    }

    /// Compares `ON` with `R/2`; within `tol(R)` the triangle is right.
    pub fn classify(&self) -> AngleKind {
        let c = self.centers();
        let on = c.circumcenter.dist(c.nine_point_center);
        let gap = on - 0.5 * c.circumradius;
        if gap.abs() <= tol(c.circumradius) {
            AngleKind::Right
        } else if gap < 0.0 {
            AngleKind::Acute
        } else {
            AngleKind::Obtuse
        }
    }

    /// Index of the vertex with the largest angle (opposite the longest side).
    pub fn largest_angle_vertex(&self) -> usize {
        let [a, b, c] = self.vertices;
        let sides = [b.dist(c), c.dist(a), a.dist(b)];
        (0..3).fold(0, |best, i| if sides[i] > sides[best] { i } else { best })
    }

    /// Triangle cut out by the tangents to the circumcircle at the vertices.
    ///
    /// Vertex `i` of the result is opposite vertex `i` of `self`, i.e. it is
    /// the intersection of the tangents at the two other vertices.
    pub fn tangential_triangle(&self) -> Result<Triangle> {
        if self.classify() == AngleKind::Right {
            return Err(GeomError::RightTriangle);
        }
        let cc = self.circumcircle();
        let tangents = self
            .vertices
            .map(|v| tangent_at(v, &cc).expect("vertex lies on its circumcircle"));
        let meet = |i: usize, j: usize| -> Result<Point> {
            tangents[i]
                .intersect(&tangents[j])
                .ok_or(GeomError::RightTriangle)
        };
        Triangle::new(meet(1, 2)?, meet(2, 0)?, meet(0, 1)?)
    }

    /// Side lines opposite `a`, `b`, `c`.
    pub fn side_lines(&self) -> [Line; 3] {
        let [a, b, c] = self.vertices;
        [b, c, a]
            .into_iter()
            .zip([c, a, b])
            .map(|(p, q)| Line::through(p, q).expect("distinct vertices"))
            .collect::<Vec<_>>()
            .try_into()
            .expect("three sides")
    }

    /// Inverses of the side midpoints in the circumcircle, in the same
    /// order as [`Triangle::side_midpoints`].
    pub fn inverted_midpoints(&self) -> Result<[Point; 3]> {
        let cc = self.circumcircle();
        let [ma, mb, mc] = self.side_midpoints();
        Ok([
            invert_point(ma, &cc)?,
            invert_point(mb, &cc)?,
            invert_point(mc, &cc)?,
        ])
    }
}
