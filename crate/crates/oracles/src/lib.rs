//! Brute-force reference computations for the test suites.
//!
//! Everything here works on plain `[f64; 2]` and deliberately takes a
//! different route from the library: perpendicular-bisector and altitude
//! intersections, law of cosines, and tangency through the discriminant of
//! the implicit conic equation.

use rand::Rng;

pub type P = [f64; 2];

/// Vertices uniform in `[-half_width, half_width]²`, resampled until the
/// triangle area is at least `min_area`.
pub fn random_vertices<R: Rng>(rng: &mut R, half_width: f64, min_area: f64) -> [P; 3] {
    loop {
        let mut pt = || {
            [
                rng.gen_range(-half_width..half_width),
                rng.gen_range(-half_width..half_width),
            ]
        };
        let (a, b, c) = (pt(), pt(), pt());
        let area = 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).abs();
        if area >= min_area {
            return [a, b, c];
        }
    }
}

fn sub(a: P, b: P) -> P {
    [a[0] - b[0], a[1] - b[1]]
}

fn dot(a: P, b: P) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub fn dist(a: P, b: P) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Solves `n1 · x = o1`, `n2 · x = o2` by Cramer's rule.
pub fn solve_lines(n1: P, o1: f64, n2: P, o2: f64) -> Option<P> {
    let det = n1[0] * n2[1] - n1[1] * n2[0];
    if det == 0.0 {
        return None;
    }
    Some([
        (o1 * n2[1] - o2 * n1[1]) / det,
        (n1[0] * o2 - n2[0] * o1) / det,
    ])
}

/// Circumcenter as the intersection of two perpendicular bisectors.
pub fn circumcenter_bisectors(a: P, b: P, c: P) -> Option<P> {
    let mid = |p: P, q: P| [(p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0];
    let n1 = sub(b, a);
    let n2 = sub(c, a);
    solve_lines(n1, dot(n1, mid(a, b)), n2, dot(n2, mid(a, c)))
}

/// Orthocenter as the intersection of the altitudes from `a` and `b`.
pub fn orthocenter_altitudes(a: P, b: P, c: P) -> Option<P> {
    let n1 = sub(c, b);
    let n2 = sub(c, a);
    solve_lines(n1, dot(n1, a), n2, dot(n2, b))
}

/// Interior angles at `a`, `b`, `c` from the law of cosines.
pub fn angles(a: P, b: P, c: P) -> [f64; 3] {
    let (la, lb, lc) = (dist(b, c), dist(c, a), dist(a, b));
    let at = |opp: f64, s1: f64, s2: f64| {
        ((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2))
            .clamp(-1.0, 1.0)
            .acos()
    };
    [at(la, lb, lc), at(lb, lc, la), at(lc, la, lb)]
}

/// -1 acute, 0 right, +1 obtuse, comparing the largest angle with π/2.
pub fn angle_class(a: P, b: P, c: P, angular_tol: f64) -> i8 {
    let largest = angles(a, b, c).into_iter().fold(0.0, f64::max);
    let gap = largest - std::f64::consts::FRAC_PI_2;
    if gap.abs() <= angular_tol {
        0
    } else if gap < 0.0 {
        -1
    } else {
        1
    }
}

/// `A x² + B xy + C y² + D x + E y + F = 0`.
#[derive(Debug, Clone, Copy)]
pub struct ImplicitConic {
    pub coef: [f64; 6],
}

impl ImplicitConic {
    /// Central conic `u²/a² ± v²/b² = 1` in the frame centered at `center`
    /// with `u` along `axis` (unit).
    pub fn central(center: P, axis: P, a: f64, b: f64, hyperbola: bool) -> Self {
        let s = if hyperbola { -1.0 } else { 1.0 };
        let e1 = axis;
        let e2 = [-axis[1], axis[0]];
        let (ia, ib) = (1.0 / (a * a), s / (b * b));
        let qa = e1[0] * e1[0] * ia + e2[0] * e2[0] * ib;
        let qb = 2.0 * (e1[0] * e1[1] * ia + e2[0] * e2[1] * ib);
        let qc = e1[1] * e1[1] * ia + e2[1] * e2[1] * ib;
        let [cx, cy] = center;
        let qd = -(2.0 * qa * cx + qb * cy);
        let qe = -(qb * cx + 2.0 * qc * cy);
        let qf = qa * cx * cx + qb * cx * cy + qc * cy * cy - 1.0;
        Self {
            coef: [qa, qb, qc, qd, qe, qf],
        }
    }

    pub fn eval(&self, p: P) -> f64 {
        let [a, b, c, d, e, f] = self.coef;
        let [x, y] = p;
        a * x * x + b * x * y + c * y * y + d * x + e * y + f
    }

    /// Discriminant of the quadratic in `t` obtained by substituting
    /// `x = offset · n + t · n⊥` into the conic equation.
    pub fn discriminant(&self, normal: P, offset: f64) -> f64 {
        let [a, b, c, d, e, _] = self.coef;
        let dir = [-normal[1], normal[0]];
        let base = [offset * normal[0], offset * normal[1]];
        let alpha = a * dir[0] * dir[0] + b * dir[0] * dir[1] + c * dir[1] * dir[1];
        let beta = 2.0 * a * base[0] * dir[0]
            + b * (base[0] * dir[1] + base[1] * dir[0])
            + 2.0 * c * base[1] * dir[1]
            + d * dir[0]
            + e * dir[1];
        let gamma = self.eval(base);
        beta * beta - 4.0 * alpha * gamma
    }

    /// Offsets `p` for which the line `normal · x = p` meets the conic in a
    /// double root: the discriminant is quadratic in `p`.
    pub fn tangent_offsets(&self, normal: P) -> Vec<f64> {
        let d0 = self.discriminant(normal, 0.0);
        let dp = self.discriminant(normal, 1.0);
        let dm = self.discriminant(normal, -1.0);
        let k2 = 0.5 * (dp + dm) - d0;
        let k1 = 0.5 * (dp - dm);
        if k2.abs() < 1e-300 {
            return if k1 == 0.0 {
                Vec::new()
            } else {
                vec![-d0 / k1]
            };
        }
        let disc = k1 * k1 - 4.0 * k2 * d0;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        // numerically stable pair of roots
        let q = -0.5 * (k1 + k1.signum() * sq);
        if q == 0.0 {
            return vec![0.0];
        }
        vec![q / k2, d0 / q]
    }

    /// Offset distance from the line `normal · x = offset` to the nearest
    /// parallel tangent line.
    pub fn tangency_gap(&self, normal: P, offset: f64) -> f64 {
        self.tangent_offsets(normal)
            .into_iter()
            .map(|p| (p - offset).abs())
            .fold(f64::INFINITY, f64::min)
    }
}
