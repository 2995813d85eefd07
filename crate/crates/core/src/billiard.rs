//! Billiards inside an ellipse.
//!
//! Chords are intersected in the ellipse's canonical frame in double-double
//! arithmetic, and the state between bounces is never rounded, so long runs
//! do not drift. Every segment of a trajectory is tangent to
//! one confocal conic, its caustic, unless the first segment passes through
//! a focus; then the segments pass alternately through both foci.

use std::f64::consts::TAU;

use crate::conics::{ConfocalConic, ConicKind, Ellipse};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::geometry::{Line2, Point2, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub boundary: Ellipse,
    /// Start point followed by one vertex per bounce.
    pub vertices: Vec<Point2>,
    /// Unit direction leaving each vertex.
    pub directions: Vec<Point2>,
    pub closed: bool,
    pub period: Option<usize>,
    /// `None` for focal trajectories.
    pub caustic: Option<ConfocalConic>,
    /// The first segment passes through one focus and the second through
    /// the other. Later segments keep alternating in exact arithmetic, but
    /// the distance to the focus grows geometrically under rounding.
    pub alternating_foci: bool,
}

impl Trajectory {
    pub fn bounces(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Lines through consecutive vertices.
    pub fn segments(&self) -> Vec<Line2> {
        self.vertices
            .windows(2)
            .filter_map(|w| Line2::through(w[0], w[1]).ok())
            .collect()
    }

    /// `|λ_i - λ_0|` for every segment, `λ_0` from the first one.
    pub fn caustic_deviation(&self) -> f64 {
        let segs = self.segments();
        let Some(first) = segs.first() else {
            return 0.0;
        };
        let l0 = self.boundary.line_lambda(first);
        segs.iter()
            .map(|s| (self.boundary.line_lambda(s) - l0).abs())
            .fold(0.0, f64::max)
    }
}

/// The ellipse's canonical frame in double-double precision. Near the
/// separatrix a rounding error of one ulp per bounce is amplified by up to
/// `1e10` within a few bounces, so the state between bounces is kept in
/// this frame and only rounded when recorded.
struct DdFrame {
    center: [Dd; 2],
    axis: [Dd; 2],
    a: Dd,
    b: Dd,
}

/// Position and direction in the canonical frame.
#[derive(Clone, Copy)]
struct DdState {
    p: [Dd; 2],
    v: [Dd; 2],
}

impl DdFrame {
    fn new(e: &Ellipse) -> DdFrame {
        let (f1, f2) = (e.focus1(), e.focus2());
        let half = Dd::from(0.5);
        let dx = Dd::from(f2.x) - Dd::from(f1.x);
        let dy = Dd::from(f2.y) - Dd::from(f1.y);
        let len2 = dx * dx + dy * dy;
        let axis = if len2.to_f64() > 0.0 {
            let len = len2.sqrt();
            [dx / len, dy / len]
        } else {
            [Dd::from(1.0), Dd::ZERO]
        };
        let d = Dd::from(e.rope_length());
        let a = d * d * Dd::from(0.25);
        DdFrame {
            center: [
                (Dd::from(f1.x) + Dd::from(f2.x)) * half,
                (Dd::from(f1.y) + Dd::from(f2.y)) * half,
            ],
            axis,
            a,
            b: a - len2 * Dd::from(0.25),
        }
    }

    fn local(&self, p: Point2, v: Point2) -> DdState {
        let [ux, uy] = self.axis;
        let (qx, qy) = (
            Dd::from(p.x) - self.center[0],
            Dd::from(p.y) - self.center[1],
        );
        let (vx, vy) = (Dd::from(v.x), Dd::from(v.y));
        DdState {
            p: [qx * ux + qy * uy, ux * qy - uy * qx],
            v: [vx * ux + vy * uy, ux * vy - uy * vx],
        }
    }

    fn world(&self, s: &DdState) -> (Point2, Point2) {
        let [ux, uy] = self.axis;
        let [x, y] = s.p;
        let [vx, vy] = s.v;
        let p = Point2 {
            x: (self.center[0] + ux * x - uy * y).to_f64(),
            y: (self.center[1] + uy * x + ux * y).to_f64(),
        };
        let v = Point2 {
            x: (ux * vx - uy * vy).to_f64(),
            y: (uy * vx + ux * vy).to_f64(),
        };
        (p, v)
    }

    /// Far intersection of the ray with `B x^2 + A y^2 = A B`, and the
    /// direction reflected there.
    fn bounce(&self, s: &DdState, near: f64) -> Result<DdState> {
        let (a, b) = (self.a, self.b);
        let [x, y] = s.p;
        let [vx, vy] = s.v;
        let qa = b * vx * vx + a * vy * vy;
        let qb = b * x * vx + a * y * vy;
        let qc = b * x * x + a * y * y - a * b;
        let disc = qb * qb - qa * qc;
        if disc.to_f64() < 0.0 || qa.to_f64() <= 0.0 {
            return Err(Error::TangentialStart);
        }
        let root = disc.sqrt();
        let t = if qb.to_f64() <= 0.0 {
            (root - qb) / qa
        } else {
            -qc / (qb + root)
        };
        if t.to_f64() <= near {
            return Err(Error::TangentialStart);
        }
        let hit = [x + t * vx, y + t * vy];
        let n = [b * hit[0], a * hit[1]];
        let k = Dd::from(2.0) * (vx * n[0] + vy * n[1]) / (n[0] * n[0] + n[1] * n[1]);
        let out = [vx - k * n[0], vy - k * n[1]];
        let len = (out[0] * out[0] + out[1] * out[1]).sqrt();
        if len.to_f64() == 0.0 {
            return Err(Error::TangentialStart);
        }
        Ok(DdState {
            p: hit,
            v: [out[0] / len, out[1] / len],
        })
    }
}

/// Checks that `from` is inside or on `e` and that `direction` does not
/// leave the ellipse there; returns the unit direction.
fn check_launch(e: &Ellipse, from: Point2, direction: Point2) -> Result<Point2> {
    let dir = direction
        .normalized()
        .ok_or(Error::InvalidArgument("zero direction".into()))?;
    let d = e.rope_length();
    let residual = e.focal_residual(from);
    if residual > DEFAULT_TOL * d {
        return Err(Error::InvalidArgument(
            "start point lies outside the ellipse".into(),
        ));
    }
    if residual.abs() <= DEFAULT_TOL * d {
        let n = e.focal_normal(from).ok_or(Error::TangentialStart)?;
        let inward = -n.dot(dir);
        if inward.abs() < 1e-12 {
            return Err(Error::TangentialStart);
        }
        if inward < 0.0 {
            return Err(Error::InvalidArgument(
                "direction points out of the ellipse".into(),
            ));
        }
    }
    Ok(dir)
}

/// The first boundary point along the ray from `from` in `direction`, and
/// the reflected unit direction there.
pub fn next_bounce(e: &Ellipse, from: Point2, direction: Point2) -> Result<(Point2, Point2)> {
    let dir = check_launch(e, from, direction)?;
    let frame = DdFrame::new(e);
    let s = frame.bounce(&frame.local(from, dir), 1e-10 * e.rope_length())?;
    Ok(frame.world(&s))
}

/// Simulates up to `max_bounces` reflections, stopping early once the orbit
/// closes within [`DEFAULT_TOL`]. A start strictly inside the ellipse is
/// replaced by the first boundary hit.
pub fn run(
    e: &Ellipse,
    start: Point2,
    direction: Point2,
    max_bounces: usize,
) -> Result<Trajectory> {
    run_with_tol(e, start, direction, max_bounces, DEFAULT_TOL)
}

pub fn run_with_tol(
    e: &Ellipse,
    start: Point2,
    direction: Point2,
    max_bounces: usize,
    tol: f64,
) -> Result<Trajectory> {
    if max_bounces == 0 {
        return Err(Error::InvalidArgument(
            "max_bounces must be at least 1".into(),
        ));
    }
    let d = e.rope_length();
    let dir = check_launch(e, start, direction)?;
    let frame = DdFrame::new(e);
    let mut state = frame.local(start, dir);
    if e.focal_residual(start).abs() > DEFAULT_TOL * d {
        state = frame.bounce(&state, 1e-10 * d)?;
    }
    let (p, dir) = frame.world(&state);
    let mut t = Trajectory {
        boundary: *e,
        vertices: vec![p],
        directions: vec![dir],
        closed: false,
        period: None,
        caustic: None,
        alternating_foci: false,
    };
    for _ in 0..max_bounces {
        state = frame.bounce(&state, 1e-10 * d)?;
        let (p, dir) = frame.world(&state);
        t.vertices.push(p);
        t.directions.push(dir);
        let k = t.vertices.len() - 1;
        if k >= 2 && closes_at(&t, k, tol) {
            t.period = Some(k);
            t.closed = true;
            break;
        }
    }
    let first = Line2::new(t.vertices[0], t.directions[0])?;
    if e.passes_through_focus(&first, DEFAULT_TOL) {
        t.alternating_foci = alternates_foci(&t);
    } else {
        t.caustic = Some(classify_caustic(&t)?);
    }
    Ok(t)
}

fn closes_at(t: &Trajectory, k: usize, tol: f64) -> bool {
    let d = t.boundary.rope_length();
    t.vertices[k].distance(t.vertices[0]) < tol * d
        && t.directions[k].distance(t.directions[0]) < tol
}

/// Smallest `k >= 2` with vertex and outgoing direction `k` matching those
/// at the start.
pub fn detect_period(t: &Trajectory, tol: f64) -> Option<usize> {
    let n = t.vertices.len().min(t.directions.len());
    (2..n).find(|&k| closes_at(t, k, tol))
}

fn alternates_foci(t: &Trajectory) -> bool {
    let e = &t.boundary;
    let tol = DEFAULT_TOL * e.rope_length();
    let segs = t.segments();
    let Some(first) = segs.first() else {
        return false;
    };
    let (a, b) = if first.distance(e.focus1()) <= first.distance(e.focus2()) {
        (e.focus1(), e.focus2())
    } else {
        (e.focus2(), e.focus1())
    };
    segs.iter().take(2).enumerate().all(|(i, s)| {
        let f = if i % 2 == 0 { a } else { b };
        s.distance(f) < tol
    })
}

/// The caustic of the first segment, checked against every other segment.
pub fn classify_caustic(t: &Trajectory) -> Result<ConfocalConic> {
    let segs = t.segments();
    let first = segs
        .first()
        .ok_or(Error::InvalidArgument("trajectory has no segment".into()))?;
    let caustic = t.boundary.caustic_of_line(first)?;
    let (a, _) = t.boundary.axes_sq();
    let deviation = t.caustic_deviation();
    if deviation >= DEFAULT_TOL * a {
        return Err(Error::CausticMismatch { deviation });
    }
    Ok(caustic)
}

/// The unit direction from the boundary point `p` along a tangent of
/// `caustic`, pointing into the ellipse and turning counterclockwise about
/// its center.
pub fn launch_tangent_to(caustic: &ConfocalConic, p: Point2) -> Result<Point2> {
    let e = &caustic.base;
    let lines = caustic.tangents_from(p).ok_or(Error::InvalidArgument(
        "no tangent to the caustic from the start point".into(),
    ))?;
    let n = e.focal_normal(p).ok_or(Error::TangentialStart)?;
    let radial = p - e.center();
    lines
        .iter()
        .flat_map(|l| [l.direction, -l.direction])
        .filter(|v| v.dot(n) < 0.0)
        .max_by(|u, v| radial.cross(*u).total_cmp(&radial.cross(*v)))
        .ok_or(Error::TangentialStart)
}

/// Caustic parameter of the convex 4-periodic orbits: `AB / (A + B)`.
pub fn convex_four_periodic_lambda(e: &Ellipse) -> f64 {
    let (a, b) = e.axes_sq();
    a * b / (a + b)
}

/// Caustic parameter of the self-intersecting 4-periodic orbits,
/// `AB / (A - B)`, which is a hyperbola only when `A > 2B`.
pub fn butterfly_four_periodic_lambda(e: &Ellipse) -> Option<f64> {
    let (a, b) = e.axes_sq();
    (a > 2.0 * b).then(|| a * b / (a - b))
}

/// Unit direction leaving the major-axis vertex `point_at(0)` at angle
/// `theta` from the major axis, turning counterclockwise. Its chord is
/// tangent to the confocal member `B cos^2 theta`.
fn vertex_launch(e: &Ellipse, theta: f64) -> Point2 {
    e.dir_to_world(Point2::new(-theta.cos(), theta.sin()))
}

/// Winding about the center accumulated over `bounces` bounces.
fn winding(e: &Ellipse, start: Point2, dir: Point2, bounces: usize) -> Result<f64> {
    let (mut p, mut dir) = (start, dir);
    let c = e.center();
    let mut total = 0.0;
    for _ in 0..bounces {
        let (q, out) = next_bounce(e, p, dir)?;
        total += (p - c).cross(q - c).atan2((p - c).dot(q - c));
        (p, dir) = (q, out);
    }
    Ok(total)
}

/// Launch angle at the major-axis vertex of the orbit that closes after
/// `period` bounces while winding `turns` times around the center. The
/// winding shrinks as the angle grows, from `period * pi` along the axis to
/// zero across it. Bisecting on the angle rather than on the caustic
/// parameter keeps full precision when the caustic hugs the focal segment.
fn periodic_launch_angle(e: &Ellipse, period: usize, turns: usize) -> Result<f64> {
    if period < 3 || turns == 0 || 2 * turns >= period {
        return Err(Error::InvalidArgument("need 0 < turns/period < 1/2".into()));
    }
    let start = e.point_at(0.0);
    let target = TAU * turns as f64;
    let (mut lo, mut hi) = (0.0, std::f64::consts::FRAC_PI_2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if winding(e, start, vertex_launch(e, mid), period)? < target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Parameter of the confocal ellipse whose tangent orbits close after
/// `period` bounces while winding `turns` times around the center, with
/// `0 < turns / period < 1/2`.
pub fn periodic_caustic_lambda(e: &Ellipse, period: usize, turns: usize) -> Result<f64> {
    let theta = periodic_launch_angle(e, period, turns)?;
    let (_, b) = e.axes_sq();
    Ok(b * theta.cos().powi(2))
}

/// The `period`-periodic orbit winding `turns` times, launched from the
/// major-axis vertex. Unlike [`orbit_along_caustic`] this never rounds the
/// orbit through its caustic parameter, so it stays closed when that
/// parameter is within rounding of `B`.
pub fn periodic_orbit(
    e: &Ellipse,
    period: usize,
    turns: usize,
    max_bounces: usize,
) -> Result<Trajectory> {
    let theta = periodic_launch_angle(e, period, turns)?;
    run(e, e.point_at(0.0), vertex_launch(e, theta), max_bounces)
}

/// The orbit tangent to `caustic` starting at the boundary point with
/// parameter `t`.
pub fn orbit_along_caustic(
    caustic: &ConfocalConic,
    t: f64,
    max_bounces: usize,
) -> Result<Trajectory> {
    let e = &caustic.base;
    let start = e.point_at(t);
    let dir = launch_tangent_to(caustic, start)?;
    run(e, start, dir, max_bounces)
}

/// Whether the confocal conic is an ellipse caustic of a convex orbit.
pub fn is_convex_caustic(c: &ConfocalConic) -> bool {
    c.kind == ConicKind::ConfocalEllipse
}
