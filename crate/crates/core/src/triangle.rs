//! Every triangle is a 3-periodic billiard trajectory in exactly one ellipse.
//!
//! The exterior bisectors of a triangle `KLM` bound an acute host triangle
//! `ABC` whose altitude feet are `K`, `L`, `M`. The feet divide the host's
//! sides in ratios fixed by the host's side lengths, and the Marden ellipse
//! with those masses touches the host's sides exactly at `K`, `L`, `M`.

use crate::certificate::{
    certify, falsify_uniqueness, refine_foci, UniquenessReport, VertexCertificate,
};
use crate::conics::Ellipse;
use crate::error::{Error, Result};
use crate::geometry::{
    diameter, exterior_bisector, is_acute, is_degenerate_triangle, Line2, Point2, DEFAULT_TOL,
};
use crate::marden::{marden_ellipse, orthic_weights};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleTrajectory {
    pub k: Point2,
    pub l: Point2,
    pub m: Point2,
    /// Host vertices, labeled so that `K` lies on `BC`, `L` on `CA`, `M` on `AB`.
    pub host_a: Point2,
    pub host_b: Point2,
    pub host_c: Point2,
    pub boundary: Ellipse,
}

impl TriangleTrajectory {
    pub fn vertices(&self) -> [Point2; 3] {
        [self.k, self.l, self.m]
    }

    pub fn host(&self) -> [Point2; 3] {
        [self.host_a, self.host_b, self.host_c]
    }

    /// Host side through each trajectory vertex, in `K, L, M` order. These
    /// are the exterior bisectors at the vertices; building them from the
    /// vertices rather than from the host corners keeps them accurate when
    /// the host is huge.
    pub fn host_sides(&self) -> Result<[Line2; 3]> {
        let (k, l, m) = (self.k, self.l, self.m);
        let degenerate = |_| Error::DegenerateTriangle;
        Ok([
            exterior_bisector(m, k, l).map_err(degenerate)?,
            exterior_bisector(k, l, m).map_err(degenerate)?,
            exterior_bisector(l, m, k).map_err(degenerate)?,
        ])
    }

    pub fn certificates(&self) -> Result<Vec<VertexCertificate>> {
        Ok(certify(
            &self.boundary,
            &self.vertices(),
            &self.host_sides()?,
        ))
    }
}

/// The triangle bounded by the exterior bisectors of `KLM`.
pub fn host_triangle(k: Point2, l: Point2, m: Point2) -> Result<(Point2, Point2, Point2)> {
    if is_degenerate_triangle(k, l, m) {
        return Err(Error::DegenerateTriangle);
    }
    let degenerate = |_| Error::DegenerateTriangle;
    let at_k = exterior_bisector(m, k, l).map_err(degenerate)?;
    let at_l = exterior_bisector(k, l, m).map_err(degenerate)?;
    let at_m = exterior_bisector(l, m, k).map_err(degenerate)?;
    let meet = |p: &Line2, q: &Line2| p.intersect(q).ok_or(Error::DegenerateTriangle);
    let a = meet(&at_l, &at_m)?;
    let b = meet(&at_k, &at_m)?;
    let c = meet(&at_k, &at_l)?;
    Ok((a, b, c))
}

/// Feet of the altitudes from `A`, `B`, `C` of an acute triangle.
pub fn orthic_feet(a: Point2, b: Point2, c: Point2) -> Result<(Point2, Point2, Point2)> {
    if is_degenerate_triangle(a, b, c) {
        return Err(Error::DegenerateTriangle);
    }
    if !is_acute(a, b, c, 1e-12) {
        return Err(Error::NotAcute);
    }
    let foot = |v: Point2, p: Point2, q: Point2| Ok::<_, Error>(Line2::through(p, q)?.project(v));
    Ok((foot(a, b, c)?, foot(b, c, a)?, foot(c, a, b)?))
}

/// The unique ellipse in which `KLM` is a 3-periodic billiard trajectory.
pub fn boundary_ellipse(k: Point2, l: Point2, m: Point2) -> Result<TriangleTrajectory> {
    let (a, b, c) = host_triangle(k, l, m)?;
    let weights = orthic_weights(a, b, c)?;
    let marden = marden_ellipse(a, b, c, weights)?;
    // The Marden foci lose accuracy when the host is far larger than KLM;
    // polishing against KLM itself restores it.
    let boundary = refine_foci(&marden.ellipse, &[k, l, m]);
    Ok(TriangleTrajectory {
        k,
        l,
        m,
        host_a: a,
        host_b: b,
        host_c: c,
        boundary,
    })
}

/// Numerical falsification of uniqueness: every ellipse perturbed by
/// `perturbation * diameter` must break some certificate by more than ten
/// times the default tolerance.
pub fn verify_uniqueness(t: &TriangleTrajectory, perturbation: f64) -> Result<UniquenessReport> {
    Ok(falsify_uniqueness(
        &t.boundary,
        &t.vertices(),
        &t.host_sides()?,
        perturbation,
        DEFAULT_TOL,
    ))
}

/// Largest distance between the host's altitude feet and `K, L, M`,
/// relative to the trajectory's diameter.
pub fn orthic_mismatch(t: &TriangleTrajectory) -> Result<f64> {
    let (k, l, m) = orthic_feet(t.host_a, t.host_b, t.host_c)?;
    let diam = diameter(&t.vertices());
    Ok(k.distance(t.k).max(l.distance(t.l)).max(m.distance(t.m)) / diam)
}
