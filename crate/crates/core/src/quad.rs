//! Boundary ellipses of 4-periodic trajectories: parallelograms and Darboux
//! butterflies.
//!
//! A parallelogram `EFGH` sits inside the rectangle `ABCD` formed by its
//! exterior bisectors, with `E` on `AB`, `F` on `BC`, `G` on `CD` and `H` on
//! `DA`. With `a = |AB|`, `b = |BC|`, `e = |AE|` and the focus `F1` at
//! distance `x` from `AD` and `y` from `AB`,
//!
//! ```text
//! (a - 2x)^2 - (b - 2y)^2 = a^2 - b^2
//! (a - 2x)(b - 2y)       = b (a - 2e)
//! ```
//!
//! and the second focus is the mirror of `F1` through the rectangle's center.
//!
//! A butterfly `GHKL` has congruent opposite sides, one pair of which
//! crosses. Its exterior bisectors form a kite `ABCD` symmetric about `AC`.
//! In the frame `A = (0, 0)`, `C = (1, 0)` with apex `B = (b1, b2)`, the
//! focus inside `ABC` is
//!
//! ```text
//! f1 = (b1^2 + b2^2) / (1 - 2 b1 + 2 b1^2 + 2 b2^2),   f2^2 = f1 - f1^2
//! ```
//!
//! and the second focus is its mirror image across `AC`.

use crate::certificate::{certify, refine_foci, VertexCertificate};
use crate::conics::Ellipse;
use crate::error::{Error, Result};
use crate::geometry::{
    collinearity_measure, diameter, exterior_bisector, is_acute, project_onto, segments_cross,
    signed_area2, Line2, Point2,
};

/// Relative tolerance for the opposite-side congruence tests.
const SHAPE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallelogramCase {
    pub e: Point2,
    pub f: Point2,
    pub g: Point2,
    pub h: Point2,
    pub rect_a: Point2,
    pub rect_b: Point2,
    pub rect_c: Point2,
    pub rect_d: Point2,
    /// `|AB| = |CD|`.
    pub side_a: f64,
    /// `|BC| = |AD|`.
    pub side_b: f64,
    /// `|AE|`.
    pub offset_e: f64,
    /// Distance of the focus from `AD`.
    pub focus_x: f64,
    /// Distance of the focus from `AB`.
    pub focus_y: f64,
    pub boundary: Ellipse,
}

impl ParallelogramCase {
    pub fn vertices(&self) -> [Point2; 4] {
        [self.e, self.f, self.g, self.h]
    }

    pub fn rectangle(&self) -> [Point2; 4] {
        [self.rect_a, self.rect_b, self.rect_c, self.rect_d]
    }

    /// Residuals of the two focus relations, each relative to the larger
    /// magnitude on its side.
    pub fn focus_relation_residuals(&self) -> [f64; 2] {
        quadratics_residuals(
            self.side_a,
            self.side_b,
            self.offset_e,
            self.focus_x,
            self.focus_y,
        )
    }

    pub fn certificates(&self) -> Result<Vec<VertexCertificate>> {
        Ok(certify(
            &self.boundary,
            &self.vertices(),
            &quad_host_sides(&self.vertices())?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ButterflyCase {
    /// Trajectory relabeled so that `GH` and `KL` are the legs and `HK`,
    /// `LG` the crossing sides.
    pub g: Point2,
    pub h: Point2,
    pub k: Point2,
    pub l: Point2,
    pub kite_a: Point2,
    pub kite_b: Point2,
    pub kite_c: Point2,
    pub kite_d: Point2,
    pub b1: f64,
    pub b2: f64,
    pub f1: f64,
    pub f2: f64,
    pub boundary: Ellipse,
}

impl ButterflyCase {
    pub fn vertices(&self) -> [Point2; 4] {
        [self.g, self.h, self.k, self.l]
    }

    pub fn kite(&self) -> [Point2; 4] {
        [self.kite_a, self.kite_b, self.kite_c, self.kite_d]
    }

    pub fn certificates(&self) -> Result<Vec<VertexCertificate>> {
        Ok(certify(
            &self.boundary,
            &self.vertices(),
            &quad_host_sides(&self.vertices())?,
        ))
    }
}

/// Exterior bisector at each vertex of a closed quadrilateral.
pub fn quad_host_sides(v: &[Point2; 4]) -> Result<[Line2; 4]> {
    let side = |i: usize| exterior_bisector(v[(i + 3) % 4], v[i], v[(i + 1) % 4]);
    Ok([side(0)?, side(1)?, side(2)?, side(3)?])
}

fn meet(p: &Line2, q: &Line2, err: Error) -> Result<Point2> {
    p.intersect(q).ok_or(err)
}

fn check_quad(v: &[Point2; 4], degenerate: Error) -> Result<f64> {
    if v.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let diam = diameter(v);
    for i in 0..4 {
        for j in i + 1..4 {
            if v[i].distance(v[j]) <= 1e-12 * diam {
                return Err(degenerate);
            }
        }
    }
    if diam == 0.0 {
        return Err(degenerate);
    }
    Ok(diam)
}

/// Opposite sides congruent within `SHAPE_TOL * diam`.
fn opposite_sides_congruent(v: &[Point2; 4], diam: f64) -> bool {
    let len = |i: usize| v[i].distance(v[(i + 1) % 4]);
    (len(0) - len(2)).abs() <= SHAPE_TOL * diam && (len(1) - len(3)).abs() <= SHAPE_TOL * diam
}

/// The rectangle bounded by the exterior bisectors of the parallelogram
/// `EFGH`, as `A, B, C, D` with `E ∈ AB`, `F ∈ BC`, `G ∈ CD`, `H ∈ DA`.
pub fn bounding_rectangle(
    e: Point2,
    f: Point2,
    g: Point2,
    h: Point2,
) -> Result<(Point2, Point2, Point2, Point2)> {
    let v = [e, f, g, h];
    let diam = check_quad(&v, Error::DegenerateParallelogram)?;
    if (e + g - f - h).norm() > SHAPE_TOL * diam || !opposite_sides_congruent(&v, diam) {
        return Err(Error::NotParallelogram);
    }
    if signed_area2(e, f, g).abs() <= 1e-12 * diam * diam {
        return Err(Error::DegenerateParallelogram);
    }
    let sides = quad_host_sides(&v).map_err(|_| Error::DegenerateParallelogram)?;
    let [at_e, at_f, at_g, at_h] = sides;
    let err = Error::DegenerateParallelogram;
    Ok((
        meet(&at_h, &at_e, err.clone())?,
        meet(&at_e, &at_f, err.clone())?,
        meet(&at_f, &at_g, err.clone())?,
        meet(&at_g, &at_h, err)?,
    ))
}

fn quadratics_residuals(a: f64, b: f64, e: f64, x: f64, y: f64) -> [f64; 2] {
    let (xi, eta) = (a - 2.0 * x, b - 2.0 * y);
    let first = ((xi * xi - eta * eta) - (a * a - b * b)).abs()
        / (xi * xi).max(eta * eta).max(a * a).max(b * b);
    let k = b * (a - 2.0 * e);
    let second = (xi * eta - k).abs() / (xi * eta).abs().max(k.abs()).max(a * b);
    [first, second]
}

/// Both positions `(x, y)` of a focus of the ellipse inscribed in an
/// `a × b` rectangle and touching `AB` at distance `e` from `A`. The two
/// solutions are mirror images through the rectangle's center; the first
/// has `x ≤ a/2` (ties broken by `y ≤ b/2`).
pub fn parallelogram_focus(a: f64, b: f64, e: f64) -> Result<[(f64, f64); 2]> {
    if !(a.is_finite() && b.is_finite() && e.is_finite())
        || a <= 0.0
        || b <= 0.0
        || e <= 0.0
        || e >= a
    {
        return Err(Error::InvalidDimensions);
    }
    // Unknowns xi = a - 2x, eta = b - 2y: xi^2 - eta^2 = s, xi eta = k.
    let s = (a - b) * (a + b);
    let k = b * (a - 2.0 * e);
    let root = s.hypot(2.0 * k);
    let (xi, eta) = if root == 0.0 {
        (0.0, 0.0)
    } else if s >= 0.0 {
        let xi = (0.5 * (s + root)).sqrt();
        (xi, k / xi)
    } else {
        let eta = (0.5 * (root - s)).sqrt().copysign(k);
        // k == 0 here means eta > 0 and xi = 0.
        let eta = if k == 0.0 { eta.abs() } else { eta };
        (k / eta, eta)
    };
    let (xi, eta) = if xi < 0.0 || (xi == 0.0 && eta < 0.0) {
        (-xi, -eta)
    } else {
        (xi, eta)
    };
    let first = (0.5 * (a - xi), 0.5 * (b - eta));
    let second = (0.5 * (a + xi), 0.5 * (b + eta));
    Ok([first, second])
}

/// The ellipse in which the parallelogram `EFGH` is a 4-periodic billiard
/// trajectory.
pub fn parallelogram_boundary_ellipse(
    e: Point2,
    f: Point2,
    g: Point2,
    h: Point2,
) -> Result<ParallelogramCase> {
    let (ra, rb, rc, rd) = bounding_rectangle(e, f, g, h)?;
    let (side_a, side_b) = (ra.distance(rb), rb.distance(rc));
    let offset_e = ra.distance(e);
    let [(x, y), _] = parallelogram_focus(side_a, side_b, offset_e)?;
    let u = (rb - ra)
        .normalized()
        .ok_or(Error::DegenerateParallelogram)?;
    let v = (rd - ra)
        .normalized()
        .ok_or(Error::DegenerateParallelogram)?;
    let f1 = ra + u * x + v * y;
    let f2 = ra + u * (side_a - x) + v * (side_b - y);
    // Thin parallelograms give very flat ellipses in which the closed form
    // leaves the vertices about 1e-11 off the boundary; polish against the
    // vertices themselves, keeping the rope through `E`.
    let boundary = refine_foci(&Ellipse::from_foci_and_point(f1, f2, e)?, &[f, g, h, e]);
    Ok(ParallelogramCase {
        e,
        f,
        g,
        h,
        rect_a: ra,
        rect_b: rb,
        rect_c: rc,
        rect_d: rd,
        side_a,
        side_b,
        offset_e,
        focus_x: x,
        focus_y: y,
        boundary,
    })
}

/// Relabels a butterfly given in cyclic order so that the crossing sides
/// are `HK` and `LG`.
fn butterfly_labels(v: [Point2; 4]) -> Result<[Point2; 4]> {
    let diam = check_quad(&v, Error::NotButterfly)?;
    if !opposite_sides_congruent(&v, diam) {
        return Err(Error::NotButterfly);
    }
    let cross_even = segments_cross(v[0], v[1], v[2], v[3]);
    let cross_odd = segments_cross(v[1], v[2], v[3], v[0]);
    match (cross_even, cross_odd) {
        (false, true) => Ok(v),
        (true, false) => Ok([v[1], v[2], v[3], v[0]]),
        _ => Err(Error::NotButterfly),
    }
}

/// The kite bounded by the exterior bisectors of the butterfly, returned as
/// `A, B, C, D` with `AC` the symmetry axis, `H ∈ AB`, `G ∈ BC`, `K ∈ CD`,
/// `L ∈ DA`, after the relabeling described on [`ButterflyCase`].
pub fn butterfly_kite(
    g: Point2,
    h: Point2,
    k: Point2,
    l: Point2,
) -> Result<(Point2, Point2, Point2, Point2)> {
    let [g, h, k, l] = butterfly_labels([g, h, k, l])?;
    kite_of(g, h, k, l)
}

fn kite_of(g: Point2, h: Point2, k: Point2, l: Point2) -> Result<(Point2, Point2, Point2, Point2)> {
    let [at_g, at_h, at_k, at_l] =
        quad_host_sides(&[g, h, k, l]).map_err(|_| Error::NotButterfly)?;
    let err = Error::NotButterfly;
    Ok((
        meet(&at_h, &at_l, err.clone())?,
        meet(&at_g, &at_h, err.clone())?,
        meet(&at_g, &at_k, err.clone())?,
        meet(&at_k, &at_l, err)?,
    ))
}

/// Focus of the butterfly ellipse in the frame `A = (0, 0)`, `C = (1, 0)`
/// with kite apex `B = (b1, b2)`. Returns `(f1, |f2|)`; the focus inside
/// `ABC` has `f2` of the same sign as `b2`.
pub fn butterfly_focus(b1: f64, b2: f64) -> Result<(f64, f64)> {
    if !(b1.is_finite() && b2.is_finite()) {
        return Err(Error::NonFinite);
    }
    if b2 == 0.0 {
        return Err(Error::DegenerateApex);
    }
    let (a, c, b) = (
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(b1, b2),
    );
    if !is_acute(a, b, c, 1e-9) {
        return Err(Error::NotAcuteHalf);
    }
    let r2 = b1 * b1 + b2 * b2;
    let f1 = r2 / (1.0 - 2.0 * b1 + 2.0 * r2);
    Ok((f1, (f1 * (1.0 - f1)).max(0.0).sqrt()))
}

/// Residuals of the three focus conditions in the normalized frame, for
/// the projections `O, X, Y, Z, W` of `(f1, f2)` onto `AC, AB, BC, AG, CH`
/// where `G` and `H` are the feet of the altitudes from `A` and `C`:
/// collinearity of `O, Z, Y`, collinearity of `O, W, X`, and
/// `|OX - OY| / |AC|`.
pub fn butterfly_focus_conditions(b1: f64, b2: f64, f1: f64, f2: f64) -> Result<[f64; 3]> {
    let (a, c, b) = (
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(b1, b2),
    );
    let f = Point2::new(f1, f2);
    let g = project_onto(a, b, c)?;
    let h = project_onto(c, a, b)?;
    let o = project_onto(f, a, c)?;
    let x = project_onto(f, a, b)?;
    let y = project_onto(f, b, c)?;
    let z = project_onto(f, a, g)?;
    let w = project_onto(f, c, h)?;
    Ok([
        collinearity_measure(o, z, y),
        collinearity_measure(o, w, x),
        (o.distance(x) - o.distance(y)).abs(),
    ])
}

/// The ellipse in which the butterfly `GHKL` is a 4-periodic billiard
/// trajectory.
pub fn butterfly_boundary_ellipse(
    g: Point2,
    h: Point2,
    k: Point2,
    l: Point2,
) -> Result<ButterflyCase> {
    let [g, h, k, l] = butterfly_labels([g, h, k, l])?;
    let (ka, kb, kc, kd) = kite_of(g, h, k, l)?;
    let axis = kc - ka;
    let scale = axis.norm_sq();
    if scale == 0.0 {
        return Err(Error::NotButterfly);
    }
    // z -> (z - A) / (C - A), conjugated when the apex lands below the axis.
    let rel = kb - ka;
    let (b1, raw_b2) = (rel.dot(axis) / scale, axis.cross(rel) / scale);
    let flip = if raw_b2 < 0.0 { -1.0 } else { 1.0 };
    let b2 = raw_b2 * flip;
    let (f1, f2) = butterfly_focus(b1, b2)?;
    let to_world = |u: f64, v: f64| ka + axis * u + axis.perp() * (v * flip);
    let focus1 = to_world(f1, f2);
    let focus2 = to_world(f1, -f2);
    let boundary = Ellipse::from_foci_and_point(focus1, focus2, g)?;
    Ok(ButterflyCase {
        g,
        h,
        k,
        l,
        kite_a: ka,
        kite_b: kb,
        kite_c: kc,
        kite_d: kd,
        b1,
        b2,
        f1,
        f2,
        boundary,
    })
}
