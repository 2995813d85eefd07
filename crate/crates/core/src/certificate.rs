//! Per-vertex residuals certifying that a closed polygon is a billiard
//! trajectory inside an ellipse and that a host polygon touches the ellipse
//! at the trajectory's vertices.

use nalgebra::{DMatrix, DVector};

use crate::conics::Ellipse;
use crate::geometry::{diameter, reflection_law_residual, Line2, Point2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexCertificate {
    /// `| |pF1| + |pF2| - d | / d`.
    pub on_ellipse: f64,
    /// Host side's offset mismatch from its parallel support line, divided
    /// by the polygon diameter.
    pub tangency: f64,
    /// Reflection-law deviation in radians.
    pub reflection: f64,
}

impl VertexCertificate {
    pub fn worst(&self) -> f64 {
        self.on_ellipse.max(self.tangency).max(self.reflection)
    }
}

/// Certificates for every vertex of the closed polygon `vertices`;
/// `host_sides[i]` is the host side through `vertices[i]`.
///
/// The reflection law is checked against the tangent of the confocal
/// ellipse through each vertex, which is the ellipse's own tangent when the
/// vertex lies on it.
pub fn certify(e: &Ellipse, vertices: &[Point2], host_sides: &[Line2]) -> Vec<VertexCertificate> {
    assert_eq!(vertices.len(), host_sides.len());
    let n = vertices.len();
    let diam = diameter(vertices).max(f64::MIN_POSITIVE);
    (0..n)
        .map(|i| {
            let v = vertices[i];
            let prev = vertices[(i + n - 1) % n];
            let next = vertices[(i + 1) % n];
            let reflection = e
                .focal_normal(v)
                .and_then(|normal| Line2::new(v, normal.perp()).ok())
                .and_then(|t| reflection_law_residual(prev, v, next, &t).ok())
                .unwrap_or(f64::INFINITY);
            VertexCertificate {
                on_ellipse: e.focal_residual(v).abs() / e.rope_length(),
                tangency: e.tangency_residual(&host_sides[i]) / diam,
                reflection,
            }
        })
        .collect()
}

pub fn worst(certs: &[VertexCertificate]) -> f64 {
    certs
        .iter()
        .map(VertexCertificate::worst)
        .fold(0.0, f64::max)
}

/// Residuals of a closed billiard polygon against foci `f1, f2`: focal-sum
/// differences to the last vertex (relative to `diam`), then the signed
/// angle between each vertex's focal normal and its outward angle bisector.
/// Rows of the Jacobian are with respect to `(f1.x, f1.y, f2.x, f2.y)`.
fn billiard_residuals(
    f1: Point2,
    f2: Point2,
    vertices: &[Point2],
    diam: f64,
) -> Option<(DVector<f64>, DMatrix<f64>)> {
    let n = vertices.len();
    let rows = 2 * n - 1;
    let mut r = DVector::zeros(rows);
    let mut jac = DMatrix::zeros(rows, 4);
    let mut sums = Vec::with_capacity(n);
    for i in 0..n {
        let v = vertices[i];
        let prev = vertices[(i + n - 1) % n];
        let next = vertices[(i + 1) % n];
        let (d1, d2) = (v - f1, v - f2);
        let (n1, n2) = (d1.norm(), d2.norm());
        let (u1, u2) = (d1.normalized()?, d2.normalized()?);
        sums.push((n1 + n2, [-u1.x, -u1.y, -u2.x, -u2.y]));

        let outward = -((prev - v).normalized()? + (next - v).normalized()?);
        let w = u1 + u2;
        let ww = w.norm_sq();
        if ww == 0.0 {
            return None;
        }
        r[n - 1 + i] = outward.cross(w).atan2(outward.dot(w));
        // dw/df_k = -(I - u u^T) / |v - f_k|; dtheta = (w x dw) / |w|^2.
        for (col, u, len) in [(0, u1, n1), (2, u2, n2)] {
            for axis in 0..2 {
                let e = if axis == 0 {
                    Point2 { x: 1.0, y: 0.0 }
                } else {
                    Point2 { x: 0.0, y: 1.0 }
                };
                let dw = -(e - u * u.dot(e)) / len;
                jac[(n - 1 + i, col + axis)] = w.cross(dw) / ww;
            }
        }
    }
    let (last, dlast) = sums[n - 1];
    for i in 0..n - 1 {
        let (s, ds) = sums[i];
        r[i] = (s - last) / diam;
        for c in 0..4 {
            jac[(i, c)] = (ds[c] - dlast[c]) / diam;
        }
    }
    Some((r, jac))
}

fn max_abs(r: &DVector<f64>) -> f64 {
    r.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Gauss-Newton polish of the foci so that `vertices` form a billiard
/// trajectory: equal focal sums and focal normals along the angle
/// bisectors. Steps are accepted only while the largest residual shrinks,
/// so the result is never worse than the input. The rope length is taken
/// through the last vertex.
pub fn refine_foci(e: &Ellipse, vertices: &[Point2]) -> Ellipse {
    let anchor = match vertices.last() {
        Some(&p) if vertices.len() >= 3 => p,
        _ => return *e,
    };
    let diam = diameter(vertices).max(f64::MIN_POSITIVE);
    let (mut f1, mut f2) = (e.focus1(), e.focus2());
    let Some((mut r, mut jac)) = billiard_residuals(f1, f2, vertices, diam) else {
        return *e;
    };
    for _ in 0..12 {
        let Ok(step) = jac.clone().svd(true, true).solve(&-&r, 1e-15) else {
            break;
        };
        let (g1, g2) = (
            f1 + Point2 {
                x: step[0],
                y: step[1],
            },
            f2 + Point2 {
                x: step[2],
                y: step[3],
            },
        );
        match billiard_residuals(g1, g2, vertices, diam) {
            Some((rn, jn)) if max_abs(&rn) < max_abs(&r) => {
                (f1, f2, r, jac) = (g1, g2, rn, jn);
            }
            _ => break,
        }
    }
    Ellipse::from_foci_and_point(f1, f2, anchor).unwrap_or(*e)
}

/// The four variants of an ellipse with one focus moved by `delta` along
/// `+x, -x, +y, -y`, then the same for the other focus, then the rope
/// length changed by `+delta` and `-delta`.
pub fn perturbed_variants(e: &Ellipse, delta: f64) -> Vec<(String, Option<Ellipse>)> {
    let dirs = [
        ("+x", Point2 { x: 1.0, y: 0.0 }),
        ("-x", Point2 { x: -1.0, y: 0.0 }),
        ("+y", Point2 { x: 0.0, y: 1.0 }),
        ("-y", Point2 { x: 0.0, y: -1.0 }),
    ];
    let (f1, f2, d) = (e.focus1(), e.focus2(), e.rope_length());
    let mut out = Vec::with_capacity(10);
    for (name, u) in dirs {
        out.push((
            format!("focus1 {name}"),
            Ellipse::new(f1 + u * delta, f2, d).ok(),
        ));
    }
    for (name, u) in dirs {
        out.push((
            format!("focus2 {name}"),
            Ellipse::new(f1, f2 + u * delta, d).ok(),
        ));
    }
    out.push(("rope +".to_string(), Ellipse::new(f1, f2, d + delta).ok()));
    out.push(("rope -".to_string(), Ellipse::new(f1, f2, d - delta).ok()));
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct VariantResult {
    pub description: String,
    pub worst_residual: f64,
    /// Some certificate exceeds ten times the tolerance.
    pub failed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniquenessReport {
    pub variants: Vec<VariantResult>,
}

impl UniquenessReport {
    pub fn all_failed(&self) -> bool {
        self.variants.iter().all(|v| v.failed)
    }

    pub fn all_passed(&self) -> bool {
        self.variants.iter().all(|v| !v.failed)
    }
}

/// Perturbs the ellipse by `perturbation * diameter(vertices)` in ten ways
/// and re-evaluates the certificates of each variant.
pub fn falsify_uniqueness(
    e: &Ellipse,
    vertices: &[Point2],
    host_sides: &[Line2],
    perturbation: f64,
    tol: f64,
) -> UniquenessReport {
    let delta = perturbation * diameter(vertices);
    let variants = perturbed_variants(e, delta)
        .into_iter()
        .map(|(description, variant)| {
            let worst_residual = match variant {
                Some(v) => worst(&certify(&v, vertices, host_sides)),
                None => f64::INFINITY,
            };
            VariantResult {
                description,
                worst_residual,
                failed: worst_residual > 10.0 * tol,
            }
        })
        .collect();
    UniquenessReport { variants }
}
