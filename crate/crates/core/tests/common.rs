#![allow(dead_code)]

use ellipse_billiards::geometry::triangle_area;
use ellipse_billiards::{Ellipse, Point2};
use proptest::prelude::*;

pub fn point() -> impl Strategy<Value = Point2> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, y)| Point2::new(x, y))
}

/// Triangles in `[-1, 1]^2` with area above `min_area`.
pub fn triangle(min_area: f64) -> impl Strategy<Value = (Point2, Point2, Point2)> {
    (point(), point(), point()).prop_filter("thin triangle", move |&(a, b, c)| {
        triangle_area(a, b, c) > min_area
    })
}

/// Ellipses with semi-major axis in `[0.5, 2]`, axis ratio in
/// `[0.2, 0.95]`, random center and orientation.
pub fn ellipse() -> impl Strategy<Value = Ellipse> {
    (
        0.5..2.0f64,
        0.2..0.95f64,
        point(),
        0.0..std::f64::consts::PI,
    )
        .prop_map(|(a, ratio, center, angle)| {
            let b = a * ratio;
            let c = ((a - b) * (a + b)).sqrt();
            let axis = Point2::from_polar(c, angle);
            Ellipse::new(center - axis, center + axis, 2.0 * a).unwrap()
        })
}

/// Similarity `z -> s R z + t`.
#[derive(Debug, Clone, Copy)]
pub struct Similarity {
    pub scale: f64,
    pub angle: f64,
    pub shift: Point2,
}

impl Similarity {
    pub fn apply(&self, p: Point2) -> Point2 {
        p.rotate(self.angle) * self.scale + self.shift
    }
}

pub fn similarity() -> impl Strategy<Value = Similarity> {
    (0.1..10.0f64, -3.2..3.2f64, point()).prop_map(|(scale, angle, shift)| Similarity {
        scale,
        angle,
        shift: shift * 5.0,
    })
}
