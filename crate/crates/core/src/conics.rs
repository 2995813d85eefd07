//! Ellipses in focal form and their confocal families.
//!
//! An [`Ellipse`] is stored as two foci and the rope length `d`, the constant
//! focal-distance sum. The canonical frame puts the center at the origin and
//! the focal axis along `+x`; there the ellipse reads `x^2/A + y^2/B = 1`
//! with `A = a^2`, `B = b^2`. A line with unit normal `n` and offset `c`
//! (`n . x = c` in the canonical frame) is tangent to the confocal member
//! `x^2/(A - l) + y^2/(B - l) = 1` exactly when
//!
//! ```text
//! l = A n_x^2 + B n_y^2 - c^2
//! ```
//!
//! which is how caustics are identified.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geometry::{signed_angle, wrap_angle, Line2, Point2, DEFAULT_TOL};
use crate::quadratic::real_roots;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    focus1: Point2,
    focus2: Point2,
    rope_length: f64,
}

/// Center/semi-axes/rotation form, used for output and rendering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseCanonical {
    pub center: Point2,
    pub semi_major: f64,
    pub semi_minor: f64,
    /// Angle of the major axis to `+x`, in `(-pi/2, pi/2]`.
    pub rotation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    ConfocalEllipse,
    ConfocalHyperbola,
    /// `l = B`: the member collapses onto the focal segment.
    DegenerateFocalSegment,
    /// `l = A`: the member collapses onto the minor axis.
    DegenerateMinorAxis,
}

impl ConicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConicKind::ConfocalEllipse => "confocal_ellipse",
            ConicKind::ConfocalHyperbola => "confocal_hyperbola",
            ConicKind::DegenerateFocalSegment => "degenerate_focal_segment",
            ConicKind::DegenerateMinorAxis => "degenerate_minor_axis",
        }
    }

    pub fn parse(s: &str) -> Option<ConicKind> {
        [
            ConicKind::ConfocalEllipse,
            ConicKind::ConfocalHyperbola,
            ConicKind::DegenerateFocalSegment,
            ConicKind::DegenerateMinorAxis,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

/// A member of the confocal family of `base`, indexed by `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfocalConic {
    pub base: Ellipse,
    pub lambda: f64,
    pub kind: ConicKind,
}

/// Outcome of a tangency test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangency {
    pub tangent: bool,
    /// Double root of the line/ellipse intersection quadratic.
    pub witness: Point2,
    /// Offset mismatch between the line and the parallel support line, in
    /// length units.
    pub residual: f64,
}

impl Ellipse {
    pub fn new(focus1: Point2, focus2: Point2, rope_length: f64) -> Result<Ellipse> {
        if !(focus1.is_finite() && focus2.is_finite() && rope_length.is_finite()) {
            return Err(Error::NonFinite);
        }
        let focal = focus1.distance(focus2);
        if rope_length <= 0.0 || rope_length <= focal * (1.0 + 1e-12) {
            return Err(Error::DegenerateEllipse);
        }
        Ok(Ellipse {
            focus1,
            focus2,
            rope_length,
        })
    }

    pub fn circle(center: Point2, radius: f64) -> Result<Ellipse> {
        Ellipse::new(center, center, 2.0 * radius)
    }

    /// The ellipse with the given foci passing through `p`.
    pub fn from_foci_and_point(f1: Point2, f2: Point2, p: Point2) -> Result<Ellipse> {
        Ellipse::new(f1, f2, p.distance(f1) + p.distance(f2))
    }

    pub fn from_canonical(c: &EllipseCanonical) -> Result<Ellipse> {
        if !(c.semi_major >= c.semi_minor && c.semi_minor > 0.0) {
            return Err(Error::DegenerateEllipse);
        }
        let lin = ((c.semi_major - c.semi_minor) * (c.semi_major + c.semi_minor)).sqrt();
        let axis = Point2::from_polar(lin, c.rotation);
        Ellipse::new(c.center - axis, c.center + axis, 2.0 * c.semi_major)
    }

    pub fn focus1(&self) -> Point2 {
        self.focus1
    }

    pub fn focus2(&self) -> Point2 {
        self.focus2
    }

    pub fn foci(&self) -> [Point2; 2] {
        [self.focus1, self.focus2]
    }

    pub fn rope_length(&self) -> f64 {
        self.rope_length
    }

    pub fn center(&self) -> Point2 {
        self.focus1.midpoint(self.focus2)
    }

    pub fn semi_major(&self) -> f64 {
        0.5 * self.rope_length
    }

    pub fn linear_eccentricity(&self) -> f64 {
        0.5 * self.focus1.distance(self.focus2)
    }

    pub fn semi_minor(&self) -> f64 {
        let a = self.semi_major();
        let c = self.linear_eccentricity();
        ((a - c) * (a + c)).sqrt()
    }

    /// `(A, B) = (a^2, b^2)`.
    pub fn axes_sq(&self) -> (f64, f64) {
        let a = self.semi_major();
        let c = self.linear_eccentricity();
        (a * a, (a - c) * (a + c))
    }

    /// Angle of `focus2 - focus1`; zero for a circle.
    pub fn rotation(&self) -> f64 {
        let v = self.focus2 - self.focus1;
        if v.norm() == 0.0 {
            0.0
        } else {
            v.angle()
        }
    }

    fn frame(&self) -> (Point2, Point2) {
        let v = self.focus2 - self.focus1;
        let axis = v.normalized().unwrap_or(Point2 { x: 1.0, y: 0.0 });
        (self.center(), axis)
    }

    pub fn area(&self) -> f64 {
        PI * self.semi_major() * self.semi_minor()
    }

    pub fn to_local(&self, p: Point2) -> Point2 {
        let (o, u) = self.frame();
        let q = p - o;
        Point2 {
            x: q.dot(u),
            y: u.cross(q),
        }
    }

    pub fn to_world(&self, q: Point2) -> Point2 {
        let (o, u) = self.frame();
        o + u * q.x + u.perp() * q.y
    }

    pub fn dir_to_local(&self, v: Point2) -> Point2 {
        let (_, u) = self.frame();
        Point2 {
            x: v.dot(u),
            y: u.cross(v),
        }
    }

    pub fn dir_to_world(&self, v: Point2) -> Point2 {
        let (_, u) = self.frame();
        u * v.x + u.perp() * v.y
    }

    /// Parametric point `(a cos t, b sin t)` of the canonical frame.
    pub fn point_at(&self, t: f64) -> Point2 {
        self.to_world(Point2 {
            x: self.semi_major() * t.cos(),
            y: self.semi_minor() * t.sin(),
        })
    }

    pub fn focal_sum(&self, p: Point2) -> f64 {
        p.distance(self.focus1) + p.distance(self.focus2)
    }

    /// `|pF1| + |pF2| - d`; negative inside.
    pub fn focal_residual(&self, p: Point2) -> f64 {
        self.focal_sum(p) - self.rope_length
    }

    pub fn contains_point(&self, p: Point2, tol: f64) -> bool {
        self.focal_residual(p).abs() < tol * self.rope_length
    }

    /// Outward unit normal of the confocal ellipse through `p`, from the
    /// gradient of the focal sum. Undefined on the focal segment.
    pub fn focal_normal(&self, p: Point2) -> Option<Point2> {
        let u1 = (p - self.focus1).normalized()?;
        let u2 = (p - self.focus2).normalized()?;
        (u1 + u2).normalized()
    }

    /// Outward unit normal from the gradient of `x^2/A + y^2/B`.
    pub fn normal_at(&self, p: Point2) -> Option<Point2> {
        let (a, b) = self.axes_sq();
        let q = self.to_local(p);
        let g = Point2 {
            x: q.x / a,
            y: q.y / b,
        };
        g.normalized().map(|n| self.dir_to_world(n))
    }

    pub fn tangent_line_at(&self, p: Point2) -> Result<Line2> {
        let residual = self.focal_residual(p);
        if residual.abs() >= DEFAULT_TOL * self.rope_length {
            return Err(Error::PointNotOnEllipse { residual });
        }
        let n = self
            .normal_at(p)
            .ok_or(Error::PointNotOnEllipse { residual })?;
        Line2::new(p, n.perp())
    }

    /// Support distance `h(n)` of the ellipse from its center along unit `n`.
    pub fn support(&self, n: Point2) -> f64 {
        let (a, b) = self.axes_sq();
        let m = self.dir_to_local(n);
        (a * m.x * m.x + b * m.y * m.y).sqrt()
    }

    /// `|h(n) - |c||` for the line `n . (x - center) = c`; zero iff tangent.
    pub fn tangency_residual(&self, l: &Line2) -> f64 {
        let n = l.normal();
        let c = n.dot(l.point - self.center());
        (self.support(n) - c.abs()).abs()
    }

    /// Tangency within `tol * a`, with the touch point as witness.
    pub fn is_tangent(&self, l: &Line2, tol: f64) -> Tangency {
        let (a, b) = self.axes_sq();
        let p = self.to_local(l.point);
        let d = self.dir_to_local(l.direction);
        let qa = d.x * d.x / a + d.y * d.y / b;
        let qb = 2.0 * (p.x * d.x / a + p.y * d.y / b);
        let t = -qb / (2.0 * qa);
        let witness = l.at(t);
        let residual = self.tangency_residual(l);
        Tangency {
            tangent: residual < tol * self.semi_major(),
            witness,
            residual,
        }
    }

    /// Confocal parameter of the member tangent to `l` (no focus check).
    pub fn line_lambda(&self, l: &Line2) -> f64 {
        let (a, b) = self.axes_sq();
        let n = self.dir_to_local(l.normal());
        let c = l.normal().dot(l.point - self.center());
        a * n.x * n.x + b * n.y * n.y - c * c
    }

    pub fn passes_through_focus(&self, l: &Line2, tol: f64) -> bool {
        let t = tol * self.rope_length;
        l.distance(self.focus1) < t || l.distance(self.focus2) < t
    }

    /// The confocal conic tangent to `l`.
    pub fn caustic_of_line(&self, l: &Line2) -> Result<ConfocalConic> {
        if self.passes_through_focus(l, DEFAULT_TOL) {
            return Err(Error::LineThroughFocus);
        }
        Ok(self.confocal(self.line_lambda(l)))
    }

    pub fn confocal(&self, lambda: f64) -> ConfocalConic {
        let (a, b) = self.axes_sq();
        ConfocalConic {
            base: *self,
            lambda,
            kind: conic_kind(lambda, a, b),
        }
    }

    pub fn to_canonical(&self) -> EllipseCanonical {
        let mut rotation = wrap_angle(self.rotation());
        if rotation > FRAC_PI_2 {
            rotation -= PI;
        } else if rotation <= -FRAC_PI_2 {
            rotation += PI;
        }
        EllipseCanonical {
            center: self.center(),
            semi_major: self.semi_major(),
            semi_minor: self.semi_minor(),
            rotation,
        }
    }

    /// Both tangent lines from an exterior point `p`.
    pub fn tangents_from(&self, p: Point2) -> Option<[Line2; 2]> {
        self.confocal(0.0).tangents_from(p)
    }

    /// Moves `p` onto the ellipse by one Newton step on the focal residual
    /// along the focal normal.
    pub fn project_to_boundary(&self, p: Point2) -> Point2 {
        let r = self.focal_residual(p);
        let (Some(u1), Some(u2)) = (
            (p - self.focus1).normalized(),
            (p - self.focus2).normalized(),
        ) else {
            return p;
        };
        let g = u1 + u2;
        let gg = g.norm_sq();
        if gg == 0.0 {
            return p;
        }
        p - g * (r / gg)
    }

    /// Parameters `t` where the line `l.at(t)` meets the ellipse.
    pub fn line_intersections(&self, l: &Line2) -> Option<(f64, f64)> {
        let (a, b) = self.axes_sq();
        let p = self.to_local(l.point);
        let d = self.dir_to_local(l.direction);
        let qa = d.x * d.x / a + d.y * d.y / b;
        let qb = 2.0 * (p.x * d.x / a + p.y * d.y / b);
        let qc = p.x * p.x / a + p.y * p.y / b - 1.0;
        real_roots(qa, qb, qc)
    }
}

/// Half-width of the degenerate bands around `B` and `A`, relative to `A`.
/// Line parameters are computed to a few ulps of `A`; a wider band would
/// swallow the genuine caustics of very flat ellipses, whose 4-periodic and
/// near-half-turn orbits sit within `1e-9 A` of `B`.
pub const KIND_BAND: f64 = 1e-12;

fn conic_kind(lambda: f64, a: f64, b: f64) -> ConicKind {
    let band = KIND_BAND * a;
    if lambda < b - band {
        ConicKind::ConfocalEllipse
    } else if lambda <= b + band {
        ConicKind::DegenerateFocalSegment
    } else if lambda < a - band {
        ConicKind::ConfocalHyperbola
    } else {
        ConicKind::DegenerateMinorAxis
    }
}

impl ConfocalConic {
    /// Squared semi-axes `(A - l, B - l)` in the base's canonical frame; the
    /// second is negative for a hyperbola.
    pub fn axes_sq(&self) -> (f64, f64) {
        let (a, b) = self.base.axes_sq();
        (a - self.lambda, b - self.lambda)
    }

    /// `|l(line) - l|`, zero iff `line` is tangent to this member.
    pub fn line_residual(&self, l: &Line2) -> f64 {
        (self.base.line_lambda(l) - self.lambda).abs()
    }

    pub fn is_tangent(&self, l: &Line2, tol: f64) -> bool {
        let (a, _) = self.base.axes_sq();
        self.line_residual(l) < tol * a
    }

    /// The two tangent lines through `p`, or `None` when `p` sees no tangent.
    pub fn tangents_from(&self, p: Point2) -> Option<[Line2; 2]> {
        let (a2, b2) = self.axes_sq();
        let q = self.base.to_local(p);
        // a2 cos^2 s + b2 sin^2 s = (q . n(s))^2, rewritten in 2s.
        let alpha = 0.5 * ((a2 - b2) - (q.x * q.x - q.y * q.y));
        let beta = -q.x * q.y;
        let gamma = 0.5 * (q.norm_sq() - (a2 + b2));
        let r = alpha.hypot(beta);
        if r == 0.0 || gamma.abs() > r {
            return None;
        }
        let phase = beta.atan2(alpha);
        let spread = (gamma / r).clamp(-1.0, 1.0).acos();
        let line = |two_s: f64| {
            let n = Point2::from_polar(1.0, 0.5 * two_s);
            Line2::new(p, self.base.dir_to_world(n.perp()))
        };
        Some([line(phase + spread).ok()?, line(phase - spread).ok()?])
    }
}

/// Angle condition of the second focal property at an exterior point `p`:
/// the angle between tangent `t1` and `pF1` equals the angle between `pF2`
/// and tangent `t2`. Returns the absolute difference in radians.
pub fn second_focal_property_residual(e: &Ellipse, p: Point2) -> Option<f64> {
    let [t1, t2] = e.tangents_from(p)?;
    let to_f1 = e.focus1() - p;
    let to_f2 = e.focus2() - p;
    // Orient each tangent toward its touch point.
    let toward = |l: &Line2| {
        let w = e.is_tangent(l, 1.0).witness;
        if l.direction.dot(w - p) < 0.0 {
            -l.direction
        } else {
            l.direction
        }
    };
    let (d1, d2) = (toward(&t1), toward(&t2));
    let angle = |u: Point2, v: Point2| signed_angle(u, v).abs();
    let r = (angle(d1, to_f1) - angle(to_f2, d2)).abs();
    let swapped = (angle(d2, to_f1) - angle(to_f2, d1)).abs();
    Some(r.min(swapped))
}

/// Pascal check for six points of a conic: the meets of opposite sides of
/// the hexagon `p0..p5` are collinear. Coincident consecutive points use the
/// tangent of `e` as their side.
pub fn pascal_collinear(e: &Ellipse, pts: &[Point2; 6], tol: f64) -> Result<bool> {
    let scale = e.rope_length();
    let side = |i: usize| -> Result<Line2> {
        let p = pts[i % 6];
        let q = pts[(i + 1) % 6];
        if p.distance(q) <= 1e-12 * scale {
            e.tangent_line_at(p)
        } else {
            Line2::through(p, q)
        }
    };
    let meet = |i: usize| -> Result<Point2> {
        side(i)?
            .intersect(&side(i + 3)?)
            .ok_or_else(|| Error::InvalidArgument("opposite hexagon sides are parallel".into()))
    };
    let (x1, x2, x3) = (meet(0)?, meet(1)?, meet(2)?);
    Ok(crate::geometry::are_collinear(x1, x2, x3, tol))
}
