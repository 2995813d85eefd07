//! Plane primitives and the classical incidence predicates.
//!
//! [`Point2`] doubles as a free vector and, through [`Point2::to_complex`],
//! as a complex number `x + iy`. Ratios along a line are signed by scalar
//! projection onto the directed line, so the sign of a ratio does not depend
//! on the order in which the caller lists the points.

use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default absolute tolerance for unit-scale figures.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Scales `tol` by the diameter of a figure, never below the unit scale.
pub fn scaled_tol(tol: f64, diameter: f64) -> f64 {
    tol * diameter.max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    /// Panics on non-finite coordinates; use [`Point2::try_new`] for
    /// untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite(),
            "non-finite point ({x}, {y})"
        );
        Point2 { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Point2::new(r * theta.cos(), r * theta.sin())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Point2> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    /// Counter-clockwise rotation by 90 degrees.
    pub fn perp(self) -> Point2 {
        Point2 {
            x: -self.y,
            y: self.x,
        }
    }

    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2 {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn midpoint(self, o: Point2) -> Point2 {
        Point2 {
            x: 0.5 * (self.x + o.x),
            y: 0.5 * (self.y + o.y),
        }
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self + (o - self) * t
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn from_complex(z: Complex64) -> Point2 {
        Point2 { x: z.re, y: z.im }
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2 {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl AddAssign for Point2 {
    fn add_assign(&mut self, o: Point2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2 {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2 {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2 {
            x: self.x * s,
            y: self.y * s,
        }
    }
}

impl Div<f64> for Point2 {
    type Output = Point2;
    fn div(self, s: f64) -> Point2 {
        Point2 {
            x: self.x / s,
            y: self.y / s,
        }
    }
}

/// A line through `point` with unit `direction`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    pub point: Point2,
    pub direction: Point2,
}

impl Line2 {
    /// Normalizes `direction`; fails on a zero or non-finite direction.
    pub fn new(point: Point2, direction: Point2) -> Result<Self> {
        if !point.is_finite() {
            return Err(Error::NonFinite);
        }
        let direction = direction.normalized().ok_or(Error::DegenerateLine)?;
        Ok(Line2 { point, direction })
    }

    pub fn through(p: Point2, q: Point2) -> Result<Self> {
        Line2::new(p, q - p)
    }

    /// Unit normal, the direction rotated counter-clockwise.
    pub fn normal(&self) -> Point2 {
        self.direction.perp()
    }

    /// Positive on the left of the directed line.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.direction.cross(p - self.point)
    }

    pub fn distance(&self, p: Point2) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Coordinate of the orthogonal projection of `p` along the line.
    pub fn parameter(&self, p: Point2) -> f64 {
        self.direction.dot(p - self.point)
    }

    pub fn at(&self, t: f64) -> Point2 {
        self.point + self.direction * t
    }

    pub fn project(&self, p: Point2) -> Point2 {
        self.at(self.parameter(p))
    }

    /// Intersection point, or `None` when the lines are parallel to within
    /// `1e-14` in the sine of their angle.
    pub fn intersect(&self, other: &Line2) -> Option<Point2> {
        let denom = self.direction.cross(other.direction);
        if denom.abs() < 1e-14 {
            return None;
        }
        let t = (other.point - self.point).cross(other.direction) / denom;
        Some(self.at(t))
    }
}

/// Ratio `|from P| / |P to|` of directed segments along the line `from -> to`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedRatio {
    pub value: f64,
}

impl SignedRatio {
    /// Both segments are measured by scalar projection onto the direction
    /// `to - from`, so `p` need only lie near that line.
    pub fn of(from: Point2, p: Point2, to: Point2) -> Result<SignedRatio> {
        let u = (to - from).normalized().ok_or(Error::ZeroLengthSegment)?;
        let num = (p - from).dot(u);
        let den = (to - p).dot(u);
        let len = from.distance(to);
        if den.abs() <= 1e-15 * len {
            return Err(Error::VertexCoincidence);
        }
        Ok(SignedRatio { value: num / den })
    }
}

/// Mirror image of `p` across `l`.
pub fn reflect_point(p: Point2, l: &Line2) -> Point2 {
    let foot = l.project(p);
    foot * 2.0 - p
}

/// Orthogonal projection of `p` onto the line through `a` and `b`.
pub fn project_onto(p: Point2, a: Point2, b: Point2) -> Result<Point2> {
    Ok(Line2::through(a, b)?.project(p))
}

fn unit_rays(prev: Point2, vertex: Point2, next: Point2) -> Result<(Point2, Point2)> {
    let u1 = (prev - vertex).normalized().ok_or(Error::DegenerateAngle)?;
    let u2 = (next - vertex).normalized().ok_or(Error::DegenerateAngle)?;
    if u1.cross(u2).abs() < 1e-12 {
        return Err(Error::DegenerateAngle);
    }
    Ok((u1, u2))
}

/// Bisector of the exterior angle at `vertex` of the path `prev, vertex, next`.
///
/// The direction is `unit(next - vertex) - unit(prev - vertex)`.
pub fn exterior_bisector(prev: Point2, vertex: Point2, next: Point2) -> Result<Line2> {
    let (u1, u2) = unit_rays(prev, vertex, next)?;
    Line2::new(vertex, u2 - u1)
}

pub fn interior_bisector(prev: Point2, vertex: Point2, next: Point2) -> Result<Line2> {
    let (u1, u2) = unit_rays(prev, vertex, next)?;
    Line2::new(vertex, u1 + u2)
}

fn check_foot(foot: Point2, a: Point2, b: Point2, tol: f64) -> Result<()> {
    let line = Line2::through(a, b).map_err(|_| Error::ZeroLengthSegment)?;
    let distance = line.distance(foot);
    if distance > tol {
        return Err(Error::NotOnLine { distance });
    }
    if foot.distance(a) <= tol || foot.distance(b) <= tol {
        return Err(Error::VertexCoincidence);
    }
    Ok(())
}

fn triangle_tol(a: Point2, b: Point2, c: Point2) -> f64 {
    scaled_tol(DEFAULT_TOL, diameter(&[a, b, c]))
}

/// Signed Ceva product `AM/MB * BK/KC * CL/LA` for feet `K` on `BC`,
/// `L` on `CA` and `M` on `AB`.
pub fn ceva_product(
    a: Point2,
    b: Point2,
    c: Point2,
    k: Point2,
    l: Point2,
    m: Point2,
) -> Result<f64> {
    let tol = triangle_tol(a, b, c);
    check_foot(k, b, c, tol)?;
    check_foot(l, c, a, tol)?;
    check_foot(m, a, b, tol)?;
    let r1 = SignedRatio::of(a, m, b)?.value;
    let r2 = SignedRatio::of(b, k, c)?.value;
    let r3 = SignedRatio::of(c, l, a)?.value;
    Ok(r1 * r2 * r3)
}

/// Signed Menelaus product `AR/RB * BP/PC * CQ/QA` for `P` on `BC`,
/// `Q` on `CA` and `R` on `AB`. Equals `-1` exactly when `P, Q, R` are
/// collinear.
pub fn menelaus_product(
    a: Point2,
    b: Point2,
    c: Point2,
    p: Point2,
    q: Point2,
    r: Point2,
) -> Result<f64> {
    let tol = triangle_tol(a, b, c);
    check_foot(p, b, c, tol)?;
    check_foot(q, c, a, tol)?;
    check_foot(r, a, b, tol)?;
    let r1 = SignedRatio::of(a, r, b)?.value;
    let r2 = SignedRatio::of(b, p, c)?.value;
    let r3 = SignedRatio::of(c, q, a)?.value;
    Ok(r1 * r2 * r3)
}

/// Scale-free collinearity measure of three points: `|det|` divided by the
/// product of the two longest pairwise distances, i.e. the sine of the
/// smallest angle of the triangle they span. Zero when two points coincide.
pub fn collinearity_measure(p: Point2, q: Point2, r: Point2) -> f64 {
    let mut d = [p.distance(q), q.distance(r), r.distance(p)];
    d.sort_by(|x, y| y.total_cmp(x));
    let denom = d[0] * d[1];
    if denom == 0.0 {
        return 0.0;
    }
    ((q - p).cross(r - p) / denom).abs()
}

pub fn are_collinear(p: Point2, q: Point2, r: Point2, tol: f64) -> bool {
    collinearity_measure(p, q, r) < tol
}

/// True iff the feet of the perpendiculars from `s` to the side lines of
/// `ABC` are collinear, which happens exactly on the circumcircle.
pub fn simson_collinear(a: Point2, b: Point2, c: Point2, s: Point2, tol: f64) -> bool {
    let feet = [(b, c), (c, a), (a, b)].map(|(u, v)| match Line2::through(u, v) {
        Ok(line) => line.project(s),
        Err(_) => u,
    });
    are_collinear(feet[0], feet[1], feet[2], tol)
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Signed angle from `from` to `to`, in `(-pi, pi]`.
pub fn signed_angle(from: Point2, to: Point2) -> f64 {
    from.cross(to).atan2(from.dot(to))
}

/// Deviation from the billiard reflection law at `bounce`, in radians.
///
/// The incoming motion `incoming_from -> bounce` and the outgoing motion
/// `bounce -> outgoing_to` must make opposite signed angles with the tangent.
/// The result does not depend on the orientation of `tangent.direction`.
pub fn reflection_law_residual(
    incoming_from: Point2,
    bounce: Point2,
    outgoing_to: Point2,
    tangent: &Line2,
) -> Result<f64> {
    let din = (bounce - incoming_from)
        .normalized()
        .ok_or(Error::ZeroLengthSegment)?;
    let dout = (outgoing_to - bounce)
        .normalized()
        .ok_or(Error::ZeroLengthSegment)?;
    let t = tangent.direction;
    let sum = signed_angle(t, din) + signed_angle(t, dout);
    Ok(wrap_angle(sum).abs())
}

/// Diameter of a point set's axis-aligned bounding box.
pub fn diameter(points: &[Point2]) -> f64 {
    let mut lo = Point2 {
        x: f64::INFINITY,
        y: f64::INFINITY,
    };
    let mut hi = Point2 {
        x: f64::NEG_INFINITY,
        y: f64::NEG_INFINITY,
    };
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    if points.is_empty() {
        0.0
    } else {
        (hi - lo).norm()
    }
}

/// Twice the signed area of triangle `abc` (positive when counter-clockwise).
pub fn signed_area2(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

pub fn triangle_area(a: Point2, b: Point2, c: Point2) -> f64 {
    0.5 * signed_area2(a, b, c).abs()
}

/// True when the triangle's area is below `1e-12 * diameter^2`.
pub fn is_degenerate_triangle(a: Point2, b: Point2, c: Point2) -> bool {
    let d = diameter(&[a, b, c]);
    d == 0.0 || triangle_area(a, b, c) < 1e-12 * d * d
}

pub fn centroid(points: &[Point2]) -> Point2 {
    let mut s = Point2::ORIGIN;
    for &p in points {
        s += p;
    }
    s / points.len() as f64
}

pub fn circumcenter(a: Point2, b: Point2, c: Point2) -> Result<Point2> {
    if is_degenerate_triangle(a, b, c) {
        return Err(Error::CollinearVertices);
    }
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let off = (ac.perp() * -ab.norm_sq() + ab.perp() * ac.norm_sq()) / d;
    Ok(a + off)
}

/// Cosines of the angles at `a`, `b`, `c` via the law of cosines.
pub fn angle_cosines(a: Point2, b: Point2, c: Point2) -> [f64; 3] {
    let at = |p: Point2, q: Point2, r: Point2| {
        let u = q - p;
        let v = r - p;
        u.dot(v) / (u.norm() * v.norm())
    };
    [at(a, b, c), at(b, c, a), at(c, a, b)]
}

/// Strict acuteness with an angular margin (radians) below the right angle.
pub fn is_acute(a: Point2, b: Point2, c: Point2, margin: f64) -> bool {
    let limit = (PI / 2.0 - margin).cos();
    angle_cosines(a, b, c).iter().all(|&cs| cs > limit)
}

/// Strict interior test for a triangle of either orientation.
pub fn point_in_triangle(p: Point2, a: Point2, b: Point2, c: Point2) -> bool {
    let s = signed_area2(a, b, c).signum();
    let d1 = signed_area2(a, b, p) * s;
    let d2 = signed_area2(b, c, p) * s;
    let d3 = signed_area2(c, a, p) * s;
    d1 > 0.0 && d2 > 0.0 && d3 > 0.0
}

/// Proper crossing of the open segments `pq` and `rs`.
pub fn segments_cross(p: Point2, q: Point2, r: Point2, s: Point2) -> bool {
    let d1 = signed_area2(p, q, r);
    let d2 = signed_area2(p, q, s);
    let d3 = signed_area2(r, s, p);
    let d4 = signed_area2(r, s, q);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn reflect_across_axis_and_diagonal() {
        let y_axis = Line2::new(Point2::ORIGIN, p(0.0, 1.0)).unwrap();
        let r = reflect_point(p(1.0, 0.0), &y_axis);
        assert_abs_diff_eq!(r.x, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.y, 0.0, epsilon = 1e-15);

        let on = p(0.0, 3.5);
        assert_eq!(reflect_point(on, &y_axis), on);

        // Reflection matrix across y = x swaps the coordinates.
        let diag = Line2::new(Point2::ORIGIN, p(1.0, 1.0)).unwrap();
        let r = reflect_point(p(2.0, 1.0), &diag);
        assert_abs_diff_eq!(r.x, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.y, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn try_new_rejects_nan() {
        assert_eq!(Point2::try_new(f64::NAN, 0.0), Err(Error::NonFinite));
        assert_eq!(Point2::try_new(0.0, f64::INFINITY), Err(Error::NonFinite));
        assert!(Line2::new(Point2::ORIGIN, Point2::ORIGIN).is_err());
    }

    #[test]
    fn exterior_bisector_examples() {
        let l = exterior_bisector(p(-1.0, 0.0), Point2::ORIGIN, p(0.0, 1.0)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(l.direction.x, s, epsilon = 1e-15);
        assert_abs_diff_eq!(l.direction.y, s, epsilon = 1e-15);
        let interior = interior_bisector(p(-1.0, 0.0), Point2::ORIGIN, p(0.0, 1.0)).unwrap();
        assert!(interior.direction.dot(l.direction).abs() < 1e-15);
        assert_abs_diff_eq!(interior.direction.x, -s, epsilon = 1e-15);

        let l = exterior_bisector(p(-1.0, 0.0), p(0.0, 1.0), p(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(l.direction.y, 0.0, epsilon = 1e-15);
        assert_eq!(l.point, p(0.0, 1.0));

        assert_eq!(
            exterior_bisector(p(-1.0, 0.0), Point2::ORIGIN, p(2.0, 0.0)),
            Err(Error::DegenerateAngle)
        );
        assert_eq!(
            exterior_bisector(p(1.0, 0.0), Point2::ORIGIN, p(2.0, 0.0)),
            Err(Error::DegenerateAngle)
        );
    }

    #[test]
    fn ceva_medians_and_altitudes() {
        let (a, b, c) = (p(0.0, 0.0), p(5.0, 0.5), p(1.5, 4.0));
        let v = ceva_product(a, b, c, b.midpoint(c), c.midpoint(a), a.midpoint(b)).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);

        let k = project_onto(a, b, c).unwrap();
        let l = project_onto(b, c, a).unwrap();
        let m = project_onto(c, a, b).unwrap();
        let v = ceva_product(a, b, c, k, l, m).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn ceva_non_concurrent_example() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(0.0, 4.0));
        let (m, k, l) = (p(1.0, 0.0), p(3.0, 1.0), p(0.0, 1.0));
        let v = ceva_product(a, b, c, k, l, m).unwrap();
        // AM/MB = 1/3, BK/KC = 1/3, CL/LA = 3.
        assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-14);

        // Brute-force concurrency: intersect AK with BL and measure CM.
        let ak = Line2::through(a, k).unwrap();
        let bl = Line2::through(b, l).unwrap();
        let x = ak.intersect(&bl).unwrap();
        let cm = Line2::through(c, m).unwrap();
        assert!(cm.distance(x) > 1e-3);
    }

    #[test]
    fn ceva_rejects_bad_feet() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(0.0, 4.0));
        let off = ceva_product(a, b, c, p(2.0, 2.5), p(0.0, 1.0), p(1.0, 0.0));
        assert!(matches!(off, Err(Error::NotOnLine { .. })));
        let at_vertex = ceva_product(a, b, c, p(2.0, 2.0), p(0.0, 1.0), a);
        assert_eq!(at_vertex, Err(Error::VertexCoincidence));
    }

    #[test]
    fn menelaus_examples() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(1.0, 3.0));
        // Transversal y = 0.5 x - 0.7 hits all three side lines.
        let t = Line2::new(p(0.0, -0.7), p(1.0, 0.5)).unwrap();
        let hit = |u: Point2, v: Point2| t.intersect(&Line2::through(u, v).unwrap()).unwrap();
        let v = menelaus_product(a, b, c, hit(b, c), hit(c, a), hit(a, b)).unwrap();
        assert_abs_diff_eq!(v, -1.0, epsilon = 1e-12);

        let v = menelaus_product(a, b, c, b.midpoint(c), c.midpoint(a), a.midpoint(b)).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn menelaus_exterior_bisector_feet() {
        let (a, b, c) = (p(0.0, 0.0), p(5.0, 0.0), p(1.0, 2.0));
        let foot = |prev: Point2, v: Point2, next: Point2| {
            exterior_bisector(prev, v, next)
                .unwrap()
                .intersect(&Line2::through(prev, next).unwrap())
                .unwrap()
        };
        let pa = foot(c, a, b);
        let pb = foot(a, b, c);
        let pc = foot(b, c, a);
        let v = menelaus_product(a, b, c, pa, pb, pc).unwrap();
        assert_abs_diff_eq!(v, -1.0, epsilon = 1e-10);
    }

    #[test]
    fn simson_examples() {
        let (a, b, c) = (p(0.0, 0.0), p(4.0, 0.0), p(1.0, 3.0));
        assert!(simson_collinear(a, b, c, a, 1e-9));

        let h = 3f64.sqrt();
        let (e1, e2, e3) = (p(0.0, 0.0), p(2.0, 0.0), p(1.0, h));
        let o = circumcenter(e1, e2, e3).unwrap();
        assert!(!simson_collinear(e1, e2, e3, o, 1e-9));

        let o = circumcenter(a, b, c).unwrap();
        let r = o.distance(a);
        for k in 0..16 {
            let s = o + Point2::from_polar(r, 0.37 + k as f64 * 0.41);
            assert!(simson_collinear(a, b, c, s, 1e-9), "sample {k}");
        }
        assert!(!simson_collinear(a, b, c, o + p(r * 1.01, 0.0), 1e-9));
    }

    #[test]
    fn reflection_residual_examples() {
        let x_axis = Line2::new(Point2::ORIGIN, p(1.0, 0.0)).unwrap();
        let r = reflection_law_residual(p(-1.0, 1.0), Point2::ORIGIN, p(1.0, 1.0), &x_axis);
        assert_abs_diff_eq!(r.unwrap(), 0.0, epsilon = 1e-15);
        let r = reflection_law_residual(p(-1.0, 1.0), Point2::ORIGIN, p(1.0, 2.0), &x_axis);
        let expected = (std::f64::consts::FRAC_PI_4 - 2f64.atan()).abs();
        assert_abs_diff_eq!(r.unwrap(), expected, epsilon = 1e-15);
        assert_abs_diff_eq!(expected, 0.3217505544, epsilon = 1e-9);

        let flipped = Line2::new(Point2::ORIGIN, p(-1.0, 0.0)).unwrap();
        let r = reflection_law_residual(p(-1.0, 1.0), Point2::ORIGIN, p(1.0, 1.0), &flipped);
        assert_abs_diff_eq!(r.unwrap(), 0.0, epsilon = 1e-15);

        let zero = reflection_law_residual(Point2::ORIGIN, Point2::ORIGIN, p(1.0, 1.0), &x_axis);
        assert_eq!(zero, Err(Error::ZeroLengthSegment));
    }

    #[test]
    fn orthic_triangle_obeys_reflection_law() {
        let (a, b, c) = (p(0.0, 0.0), p(6.0, 0.0), p(2.0, 4.5));
        let k = project_onto(a, b, c).unwrap();
        let l = project_onto(b, c, a).unwrap();
        let m = project_onto(c, a, b).unwrap();
        let sides = [
            (k, Line2::through(b, c)),
            (l, Line2::through(c, a)),
            (m, Line2::through(a, b)),
        ];
        let ring = [k, l, m];
        for (i, (pt, side)) in sides.iter().enumerate() {
            let prev = ring[(i + 2) % 3];
            let next = ring[(i + 1) % 3];
            let res = reflection_law_residual(prev, *pt, next, side.as_ref().unwrap()).unwrap();
            assert!(res < 1e-12, "residual {res} at foot {i}");
        }
    }

    #[test]
    fn wrap_angle_range() {
        assert_abs_diff_eq!(wrap_angle(3.0 * PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_angle(-PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_angle(0.5), 0.5, epsilon = 1e-15);
    }
}
