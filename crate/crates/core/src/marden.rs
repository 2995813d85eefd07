//! Marden ellipses of a triangle.
//!
//! For vertices `a1, a2, a3` (as complex numbers) and masses `m1, m2, m3`,
//! the zeros of
//!
//! ```text
//! F(z) = m1/(z - a1) + m2/(z - a2) + m3/(z - a3)
//! ```
//!
//! are the foci of the conic touching each side line `[ai, aj]` at the point
//! `ai + mi/(mi + mj) (aj - ai)`. With positive masses the conic is an
//! ellipse inscribed in the triangle; equal masses give the Steiner inellipse.

use num_complex::Complex64;

use crate::conics::Ellipse;
use crate::error::{Error, Result};
use crate::geometry::{
    ceva_product, diameter, is_degenerate_triangle, point_in_triangle, reflect_point, Line2,
    Point2, SignedRatio,
};
use crate::quadratic::complex_roots;

/// Masses defined up to a common nonzero factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightTriple {
    m: [f64; 3],
}

impl WeightTriple {
    /// Normalizes to unit sum, or to unit max-magnitude when the sum vanishes.
    pub fn new(m1: f64, m2: f64, m3: f64) -> Result<WeightTriple> {
        let m = [m1, m2, m3];
        if m.iter().any(|v| !v.is_finite() || *v == 0.0) {
            return Err(Error::ZeroWeight);
        }
        let max = m.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
        let sum: f64 = m.iter().sum();
        let scale = if sum.abs() > 1e-12 * max { sum } else { max };
        Ok(WeightTriple {
            m: m.map(|v| v / scale),
        })
    }

    pub fn equal() -> WeightTriple {
        WeightTriple { m: [1.0 / 3.0; 3] }
    }

    pub fn values(&self) -> [f64; 3] {
        self.m
    }

    pub fn sum(&self) -> f64 {
        self.m.iter().sum()
    }

    pub fn all_positive(&self) -> bool {
        self.m.iter().all(|&v| v > 0.0)
    }
}

/// Unordered focus pair, stored in lexicographic `(x, y)` order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocusPair {
    pub beta1: Point2,
    pub beta2: Point2,
}

impl FocusPair {
    pub fn new(p: Point2, q: Point2) -> FocusPair {
        if (p.x, p.y) <= (q.x, q.y) {
            FocusPair { beta1: p, beta2: q }
        } else {
            FocusPair { beta1: q, beta2: p }
        }
    }

    /// Largest pointwise distance to another pair.
    pub fn distance(&self, other: &FocusPair) -> f64 {
        let direct = self
            .beta1
            .distance(other.beta1)
            .max(self.beta2.distance(other.beta2));
        let swapped = self
            .beta1
            .distance(other.beta2)
            .max(self.beta2.distance(other.beta1));
        direct.min(swapped)
    }
}

/// Zeros of the weighted logarithmic derivative of `prod (z - ai)^mi`.
pub fn log_derivative_zeros(
    a1: Point2,
    a2: Point2,
    a3: Point2,
    w: WeightTriple,
) -> Result<FocusPair> {
    if is_degenerate_triangle(a1, a2, a3) {
        return Err(Error::CollinearVertices);
    }
    let [m1, m2, m3] = w.values();
    let max = m1.abs().max(m2.abs()).max(m3.abs());
    if w.sum().abs() <= 1e-12 * max {
        return Err(Error::WeightSumZero);
    }
    // Work relative to the centroid and at unit scale for conditioning.
    let origin = (a1.to_complex() + a2.to_complex() + a3.to_complex()) / 3.0;
    let scale = diameter(&[a1, a2, a3]);
    let z = [a1, a2, a3].map(|p| (p.to_complex() - origin) / scale);
    let c2 = Complex64::new(m1 + m2 + m3, 0.0);
    let c1 = -(m1 * (z[1] + z[2]) + m2 * (z[0] + z[2]) + m3 * (z[0] + z[1]));
    let c0 = m1 * z[1] * z[2] + m2 * z[0] * z[2] + m3 * z[0] * z[1];
    let (r1, r2) = complex_roots(c2, c1, c0);
    let back = |r: Complex64| Point2::from_complex(r * scale + origin);
    Ok(FocusPair::new(back(r1), back(r2)))
}

/// Value of the weighted logarithmic derivative at `z`.
pub fn log_derivative(a: [Point2; 3], w: WeightTriple, z: Point2) -> Complex64 {
    let m = w.values();
    let z = z.to_complex();
    (0..3).map(|i| m[i] / (z - a[i].to_complex())).sum()
}

/// Point of segment `[p, q]` dividing it in the ratio `mp : mq` from `p`.
pub fn ratio_point(p: Point2, q: Point2, mp: f64, mq: f64) -> Point2 {
    p + (q - p) * (mp / (mp + mq))
}

/// An inscribed Marden ellipse with its touch points on `[a1,a2]`,
/// `[a2,a3]`, `[a3,a1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MardenEllipse {
    pub ellipse: Ellipse,
    pub touch: [Point2; 3],
}

pub fn marden_ellipse(
    a1: Point2,
    a2: Point2,
    a3: Point2,
    w: WeightTriple,
) -> Result<MardenEllipse> {
    if !w.all_positive() {
        return Err(Error::NonPositiveWeight);
    }
    let foci = log_derivative_zeros(a1, a2, a3, w)?;
    let [m1, m2, m3] = w.values();
    let touch = [
        ratio_point(a1, a2, m1, m2),
        ratio_point(a2, a3, m2, m3),
        ratio_point(a3, a1, m3, m1),
    ];
    let ellipse = Ellipse::from_foci_and_point(foci.beta1, foci.beta2, touch[0])?;
    Ok(MardenEllipse { ellipse, touch })
}

/// The Steiner inellipse, tangent to each side at its midpoint.
pub fn steiner_ellipse(a1: Point2, a2: Point2, a3: Point2) -> Result<Ellipse> {
    Ok(marden_ellipse(a1, a2, a3, WeightTriple::equal())?.ellipse)
}

/// Condition number guard for intersecting two bisector lines.
const MAX_CONDITION: f64 = 1e8;

fn well_conditioned_meet(l1: &Line2, l2: &Line2) -> Option<Point2> {
    let sin = l1.direction.cross(l2.direction).abs();
    if sin * MAX_CONDITION < 1.0 {
        return None;
    }
    l1.intersect(l2)
}

/// The unique ellipse inscribed in `ABC` with `f1` as a focus.
///
/// The reflections of `f1` in the three side lines are all at distance `d`
/// from the second focus, so the second focus lies on the bisector of the
/// angle each pair of reflections makes at their shared vertex.
pub fn inscribed_ellipse_with_focus(
    a: Point2,
    b: Point2,
    c: Point2,
    f1: Point2,
) -> Result<Ellipse> {
    if is_degenerate_triangle(a, b, c) {
        return Err(Error::CollinearVertices);
    }
    if !point_in_triangle(f1, a, b, c) {
        return Err(Error::FocusOutsideTriangle);
    }
    let r_bc = reflect_point(f1, &Line2::through(b, c)?);
    let r_ca = reflect_point(f1, &Line2::through(c, a)?);
    let r_ab = reflect_point(f1, &Line2::through(a, b)?);
    // The vertex is equidistant from its two reflections, so the bisector is
    // the perpendicular through the vertex to the segment joining them.
    let bisector = |v: Point2, p: Point2, q: Point2| Line2::new(v, (q - p).perp());
    let at_a = bisector(a, r_ca, r_ab)?;
    let at_b = bisector(b, r_bc, r_ab)?;
    let at_c = bisector(c, r_ca, r_bc)?;
    let f2 = well_conditioned_meet(&at_a, &at_c)
        .or_else(|| well_conditioned_meet(&at_a, &at_b))
        .or_else(|| well_conditioned_meet(&at_b, &at_c))
        .ok_or(Error::DegenerateTriangle)?;
    let d = r_bc.distance(f2);
    Ellipse::new(f1, f2, d)
}

/// Masses reproducing the division ratios of touch points `K` on `BC`,
/// `L` on `CA`, `M` on `AB`: `BK:KC = m2:m3`, `CL:LA = m3:m1`,
/// `AM:MB = m1:m2`.
///
/// The three ratios are reconciled in log space by least squares; the gate
/// rejects feet whose Ceva product is off by more than `1e-6`.
pub fn weights_from_touch_points(
    a: Point2,
    b: Point2,
    c: Point2,
    k: Point2,
    l: Point2,
    m: Point2,
) -> Result<WeightTriple> {
    let ceva = ceva_product(a, b, c, k, l, m)?;
    if (ceva - 1.0).abs() > 1e-6 {
        return Err(Error::InconsistentRatios { ceva });
    }
    let rk = SignedRatio::of(b, k, c)?.value; // m2/m3
    let rl = SignedRatio::of(c, l, a)?.value; // m3/m1
    let rm = SignedRatio::of(a, m, b)?.value; // m1/m2
    if rk <= 0.0 || rl <= 0.0 || rm <= 0.0 {
        return Err(Error::NonPositiveWeight);
    }
    // Minimize the squared misfit of x2-x3 = ln rk, x3-x1 = ln rl,
    // x1-x2 = ln rm with x1+x2+x3 = 0.
    let (gk, gl, gm) = (rk.ln(), rl.ln(), rm.ln());
    let x1 = (gm - gl) / 3.0;
    let x2 = (gk - gm) / 3.0;
    let x3 = (gl - gk) / 3.0;
    WeightTriple::new(x1.exp(), x2.exp(), x3.exp())
}

/// Masses of the orthic feet of triangle `ABC`, from the side lengths
/// `a = |BC|`, `b = |CA|`, `c = |AB|`:
/// `m1 : m2 : m3 = (b^2 + c^2 - a^2) : (a^2 + c^2 - b^2) : (a^2 + b^2 - c^2)`.
pub fn orthic_weights(a: Point2, b: Point2, c: Point2) -> Result<WeightTriple> {
    let sa = b.distance(c).powi(2);
    let sb = c.distance(a).powi(2);
    let sc = a.distance(b).powi(2);
    WeightTriple::new(sb + sc - sa, sa + sc - sb, sa + sb - sc)
}
